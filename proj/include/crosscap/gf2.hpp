#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crosscap::gf2 {

/// Hard cap on vector/matrix dimension: one machine word per row.
inline constexpr unsigned kMaxDim = 64;

namespace detail {
inline void check_dim(unsigned dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("gf2: dimension must be in [1," +
                                    std::to_string(kMaxDim) + "], got " + std::to_string(dim));
}
inline uint64_t mask(unsigned dim) {
    return dim == 64 ? ~uint64_t{0} : (uint64_t{1} << dim) - 1;
}
}  // namespace detail

/// Vector over GF(2), bit-packed into a single word. Bit i is coordinate i (0-based).
class BitVec {
public:
    explicit BitVec(unsigned dim, uint64_t bits = 0) : dim_(dim), bits_(bits) {
        detail::check_dim(dim);
        bits_ &= detail::mask(dim);
    }
    static BitVec unit(unsigned dim, unsigned i) {
        if (i >= dim) throw std::invalid_argument("gf2::BitVec::unit: index out of range");
        return BitVec(dim, uint64_t{1} << i);
    }
    unsigned dim() const { return dim_; }
    uint64_t bits() const { return bits_; }
    bool get(unsigned i) const { return (bits_ >> i) & 1; }
    void set(unsigned i, bool v) {
        if (i >= dim_) throw std::invalid_argument("gf2::BitVec::set: index out of range");
        bits_ = v ? (bits_ | (uint64_t{1} << i)) : (bits_ & ~(uint64_t{1} << i));
    }
    unsigned weight() const { return static_cast<unsigned>(__builtin_popcountll(bits_)); }
    bool is_zero() const { return bits_ == 0; }
    BitVec operator^(const BitVec& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("gf2: dimension mismatch in xor");
        return BitVec(dim_, bits_ ^ o.bits_);
    }
    friend bool operator==(const BitVec&, const BitVec&) = default;
    std::string to_string() const;

private:
    unsigned dim_;
    uint64_t bits_;
};

/// Mod-2 intersection pairing in the standard basis (identity form).
int dot(const BitVec& u, const BitVec& v);

/// Square matrix over GF(2), one word per row. Entry (i,j) is bit j of row i.
class BitMat {
public:
    explicit BitMat(unsigned dim) : dim_(dim), rows_(dim, 0) { detail::check_dim(dim); }
    static BitMat identity(unsigned dim);
    static BitMat from_rows(unsigned dim, std::vector<uint64_t> rows);

    unsigned dim() const { return dim_; }
    uint64_t row(unsigned i) const { return rows_[i]; }
    const uint64_t* data() const { return rows_.data(); }
    uint64_t* data() { return rows_.data(); }
    bool get(unsigned i, unsigned j) const { return (rows_[i] >> j) & 1; }
    void set(unsigned i, unsigned j, bool v) {
        rows_[i] = v ? (rows_[i] | (uint64_t{1} << j)) : (rows_[i] & ~(uint64_t{1} << j));
    }
    bool is_identity() const;
    friend bool operator==(const BitMat&, const BitMat&) = default;
    std::string to_string() const;

private:
    unsigned dim_;
    std::vector<uint64_t> rows_;
};

BitVec mat_apply(const BitMat& m, const BitVec& v);
BitMat mat_mul(const BitMat& a, const BitMat& b);
BitMat transpose(const BitMat& m);
unsigned rank(const BitMat& m);

/// Gauss-Jordan inverse, pivoting on the first set bit of each column; nullopt if singular.
std::optional<BitMat> mat_inverse(const BitMat& m);

/// Least k >= 1 with m^k = I, by direct iteration. Throws std::domain_error on a
/// singular matrix and std::runtime_error past the iteration cap (2^20).
uint64_t mat_order(const BitMat& m);

/// Permutation matrix: e_j -> e_{images[j]} (0-based images, a bijection).
BitMat permutation_matrix(unsigned dim, const std::vector<unsigned>& images);

}  // namespace crosscap::gf2
