#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crosscap::gf2 {

// Inner loops for bit-packed GF(2) algebra. One scalar reference implementation
// plus SIMD variants selected at runtime; all variants are equivalence-tested
// against the scalar kernels and against a naive unpacked oracle.
struct Kernels {
    const char* name;
    // c = a * b for square n x n matrices, rows packed into single words (n <= 64).
    // c must not alias a or b.
    void (*mat_mul)(const uint64_t* a, const uint64_t* b, uint64_t* c, unsigned n);
    // out[k] = M * in[k] for packed vectors, where cols[j] is column j of M
    // (i.e. the rows of M transposed). in/out may alias.
    void (*apply_batch)(const uint64_t* cols, unsigned n, const uint64_t* in, uint64_t* out,
                        std::size_t count);
};

enum class KernelKind { Auto, Scalar, Avx2, Neon };

const Kernels& scalar_kernels();
const Kernels& active_kernels();

/// Select the active kernel set; returns false (leaving the selection unchanged)
/// if the requested variant is unavailable on this machine or build.
bool select_kernels(KernelKind kind);

std::vector<const Kernels*> available_kernels();

}  // namespace crosscap::gf2
