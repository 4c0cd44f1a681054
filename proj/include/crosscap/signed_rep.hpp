#pragma once

#include <cstdint>
#include <vector>

#include "crosscap/surface.hpp"

namespace crosscap::signed_rep {

/// Integer matrix acting on H1(N_g; R) in the basis x_1..x_{g-1}, with
/// x_g = -(x_1 + ... + x_{g-1}).
class SignedMat {
public:
    explicit SignedMat(unsigned n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
    static SignedMat identity(unsigned n);
    unsigned n() const { return n_; }
    int64_t& at(unsigned i, unsigned j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    int64_t at(unsigned i, unsigned j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    SignedMat operator*(const SignedMat& o) const;
    bool is_identity() const;
    friend bool operator==(const SignedMat&, const SignedMat&) = default;

private:
    unsigned n_;
    std::vector<int64_t> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Throws on
/// intermediate overflow; fine for the near-permutation matrices used here.
int64_t det(const SignedMat& m);

struct SignedAction {
    SignedMat mat;
    int64_t determinant;
};

/// The rotation's integer action (all signs +1). Validates T^order = I over Z.
SignedAction rotation_signed(const surface::CrosscapModel& model);

/// The reflection's integer action. Every one-sided class is carried with
/// reversed orientation, so each image carries sign -1. Validates sigma^2 = I.
SignedAction sigma_signed(const surface::CurveTable& table);

struct SignConventionError : std::runtime_error {
    explicit SignConventionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crosscap::signed_rep
