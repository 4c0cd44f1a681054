#include "crosscap/kernels.hpp"

namespace crosscap::gf2 {

#if defined(CROSSCAP_HAVE_AVX2_TU)
const Kernels& avx2_kernels();
#endif
#if defined(CROSSCAP_HAVE_NEON_TU)
const Kernels& neon_kernels();
#endif

namespace {

const Kernels* detect_best() {
#if defined(CROSSCAP_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
#if defined(CROSSCAP_HAVE_NEON_TU)
    return &neon_kernels();
#endif
    return &scalar_kernels();
}

const Kernels*& active_slot() {
    static const Kernels* active = detect_best();
    return active;
}

}  // namespace

const Kernels& active_kernels() { return *active_slot(); }

bool select_kernels(KernelKind kind) {
    switch (kind) {
        case KernelKind::Auto:
            active_slot() = detect_best();
            return true;
        case KernelKind::Scalar:
            active_slot() = &scalar_kernels();
            return true;
        case KernelKind::Avx2:
#if defined(CROSSCAP_HAVE_AVX2_TU)
            if (__builtin_cpu_supports("avx2")) {
                active_slot() = &avx2_kernels();
                return true;
            }
#endif
            return false;
        case KernelKind::Neon:
#if defined(CROSSCAP_HAVE_NEON_TU)
            active_slot() = &neon_kernels();
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<const Kernels*> available_kernels() {
    std::vector<const Kernels*> out{&scalar_kernels()};
#if defined(CROSSCAP_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2")) out.push_back(&avx2_kernels());
#endif
#if defined(CROSSCAP_HAVE_NEON_TU)
    out.push_back(&neon_kernels());
#endif
    return out;
}

}  // namespace crosscap::gf2
