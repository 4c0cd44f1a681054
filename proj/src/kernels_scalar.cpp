#include "crosscap/kernels.hpp"

namespace crosscap::gf2 {

namespace {

void mat_mul_scalar(const uint64_t* a, const uint64_t* b, uint64_t* c, unsigned n) {
    for (unsigned i = 0; i < n; ++i) {
        uint64_t acc = 0;
        uint64_t bits = a[i];
        while (bits) {
            unsigned j = static_cast<unsigned>(__builtin_ctzll(bits));
            bits &= bits - 1;
            acc ^= b[j];
        }
        c[i] = acc;
    }
}

void apply_batch_scalar(const uint64_t* cols, unsigned n, const uint64_t* in, uint64_t* out,
                        std::size_t count) {
    (void)n;
    for (std::size_t k = 0; k < count; ++k) {
        uint64_t acc = 0;
        uint64_t bits = in[k];
        while (bits) {
            unsigned j = static_cast<unsigned>(__builtin_ctzll(bits));
            bits &= bits - 1;
            acc ^= cols[j];
        }
        out[k] = acc;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", &mat_mul_scalar, &apply_batch_scalar};
    return k;
}

}  // namespace crosscap::gf2
