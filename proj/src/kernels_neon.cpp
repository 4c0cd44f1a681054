// NEON variants of the GF(2) kernels (aarch64).

#include "crosscap/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>

namespace crosscap::gf2 {

namespace {

void mat_mul_neon(const uint64_t* a, const uint64_t* b, uint64_t* c, unsigned n) {
    unsigned i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t rows = vld1q_u64(a + i);
        uint64x2_t acc = vdupq_n_u64(0);
        for (unsigned j = 0; j < n; ++j) {
            uint64x2_t bit = vandq_u64(vshlq_u64(rows, vdupq_n_s64(-(int64_t)j)), vdupq_n_u64(1));
            // 0 -> 0, 1 -> all-ones
            uint64x2_t msk = vsubq_u64(vdupq_n_u64(0), bit);
            acc = veorq_u64(acc, vandq_u64(msk, vdupq_n_u64(b[j])));
        }
        vst1q_u64(c + i, acc);
    }
    for (; i < n; ++i) {
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

void apply_batch_neon(const uint64_t* cols, unsigned n, const uint64_t* in, uint64_t* out,
                      std::size_t count) {
    std::size_t k = 0;
    for (; k + 2 <= count; k += 2) {
        uint64x2_t v = vld1q_u64(in + k);
        uint64x2_t acc = vdupq_n_u64(0);
        for (unsigned j = 0; j < n; ++j) {
            uint64x2_t bit = vandq_u64(vshlq_u64(v, vdupq_n_s64(-(int64_t)j)), vdupq_n_u64(1));
            uint64x2_t msk = vsubq_u64(vdupq_n_u64(0), bit);
            acc = veorq_u64(acc, vandq_u64(msk, vdupq_n_u64(cols[j])));
        }
        vst1q_u64(out + k, acc);
    }
    for (; k < count; ++k) {
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

const Kernels& neon_kernels() {
    static const Kernels k{"neon", &mat_mul_neon, &apply_batch_neon};
    return k;
}

}  // namespace crosscap::gf2

#endif
