// AVX2 variants of the GF(2) kernels. Compiled with -mavx2 on x86-64 only;
// callers gate on runtime CPU support before selecting these.

#include "crosscap/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace crosscap::gf2 {

namespace {

// Four packed rows at a time. For each column index j, broadcast b[j] and
// xor it into the lanes whose row has bit j set. Branch-free.
void mat_mul_avx2(const uint64_t* a, const uint64_t* b, uint64_t* c, unsigned n) {
    const __m256i one = _mm256_set1_epi64x(1);
    unsigned i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i rows = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i acc = _mm256_setzero_si256();
        for (unsigned j = 0; j < n; ++j) {
            __m256i bit = _mm256_and_si256(_mm256_srli_epi64(rows, static_cast<int>(j)), one);
            __m256i msk = _mm256_sub_epi64(_mm256_setzero_si256(), bit);
            acc = _mm256_xor_si256(acc, _mm256_and_si256(msk, _mm256_set1_epi64x(static_cast<long long>(b[j]))));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + i), acc);
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

void apply_batch_avx2(const uint64_t* cols, unsigned n, const uint64_t* in, uint64_t* out,
                      std::size_t count) {
    const __m256i one = _mm256_set1_epi64x(1);
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k));
        __m256i acc = _mm256_setzero_si256();
        for (unsigned j = 0; j < n; ++j) {
            __m256i bit = _mm256_and_si256(_mm256_srli_epi64(v, static_cast<int>(j)), one);
            __m256i msk = _mm256_sub_epi64(_mm256_setzero_si256(), bit);
            acc = _mm256_xor_si256(acc, _mm256_and_si256(msk, _mm256_set1_epi64x(static_cast<long long>(cols[j]))));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), acc);
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

const Kernels& avx2_kernels() {
    static const Kernels k{"avx2", &mat_mul_avx2, &apply_batch_avx2};
    return k;
}

}  // namespace crosscap::gf2

#endif  // __AVX2__
