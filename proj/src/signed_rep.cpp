#include "crosscap/signed_rep.hpp"

#include <stdexcept>

namespace crosscap::signed_rep {

SignedMat SignedMat::identity(unsigned n) {
    SignedMat m(n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

SignedMat SignedMat::operator*(const SignedMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SignedMat: dimension mismatch");
    SignedMat r(n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned k = 0; k < n_; ++k) {
            int64_t v = at(i, k);
            if (!v) continue;
            for (unsigned j = 0; j < n_; ++j) {
                int64_t prod;
                if (__builtin_mul_overflow(v, o.at(k, j), &prod) ||
                    __builtin_add_overflow(r.at(i, j), prod, &r.at(i, j)))
                    throw std::overflow_error("SignedMat: product overflow");
            }
        }
    return r;
}

bool SignedMat::is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

int64_t det(const SignedMat& m) {
    unsigned n = m.n();
    std::vector<std::vector<int64_t>> a(n, std::vector<int64_t>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    int64_t sign = 1, prev = 1;
    for (unsigned k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            unsigned piv = n;
            for (unsigned i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j) {
                int64_t t1, t2;
                if (__builtin_mul_overflow(a[i][j], a[k][k], &t1) ||
                    __builtin_mul_overflow(a[i][k], a[k][j], &t2))
                    throw std::overflow_error("det: overflow");
                a[i][j] = (t1 - t2) / prev;  // Bareiss: division is exact
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

/// Action x_i -> s * x_{perm(i)} on the quotient basis x_1..x_{g-1}, with
/// x_g eliminated through x_g = -(x_1 + ... + x_{g-1}).
SignedMat quotient_action(unsigned genus, const std::vector<unsigned>& perm1based, int s) {
    unsigned n = genus - 1;
    SignedMat m(n);
    for (unsigned i = 1; i <= n; ++i) {
        unsigned img = perm1based[i];
        if (img <= n) {
            m.at(img - 1, i - 1) += s;
        } else {
            for (unsigned j = 0; j < n; ++j) m.at(j, i - 1) -= s;
        }
    }
    return m;
}

}  // namespace

SignedAction rotation_signed(const surface::CrosscapModel& model) {
    std::vector<unsigned> perm(model.genus + 1);
    for (unsigned i = 1; i <= model.genus; ++i) perm[i] = model.rotate_index(i, 1);
    SignedMat m = quotient_action(model.genus, perm, +1);
    // order gate: T^circle = I over the integers
    SignedMat p = m;
    for (unsigned k = 1; k < model.circle; ++k) p = p * m;
    if (!p.is_identity())
        throw SignConventionError("rotation_signed: T^order != I over the integers");
    return {m, det(m)};
}

SignedAction sigma_signed(const surface::CurveTable& table) {
    unsigned g = table.model().genus;
    if (g < 13) throw std::invalid_argument("sigma_signed: genus must be >= 13");
    std::vector<unsigned> perm(g + 1);
    for (unsigned i = 1; i <= g; ++i) perm[i] = table.reflect_index(i);
    SignedMat m = quotient_action(g, perm, -1);
    if (!(m * m).is_identity())
        throw SignConventionError("sigma_signed: square is not the identity over the integers");
    return {m, det(m)};
}

}  // namespace crosscap::signed_rep
