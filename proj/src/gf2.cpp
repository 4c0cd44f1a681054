#include "crosscap/gf2.hpp"

#include "crosscap/kernels.hpp"

namespace crosscap::gf2 {

std::string BitVec::to_string() const {
    std::string s;
    s.reserve(dim_);
    for (unsigned i = 0; i < dim_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

int dot(const BitVec& u, const BitVec& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("gf2::dot: dimension mismatch");
    return __builtin_popcountll(u.bits() & v.bits()) & 1;
}

BitMat BitMat::identity(unsigned dim) {
    BitMat m(dim);
    for (unsigned i = 0; i < dim; ++i) m.rows_[i] = uint64_t{1} << i;
    return m;
}

BitMat BitMat::from_rows(unsigned dim, std::vector<uint64_t> rows) {
    if (rows.size() != dim) throw std::invalid_argument("gf2::BitMat: row count != dim");
    BitMat m(dim);
    uint64_t msk = detail::mask(dim);
    for (unsigned i = 0; i < dim; ++i) m.rows_[i] = rows[i] & msk;
    return m;
}

bool BitMat::is_identity() const {
    for (unsigned i = 0; i < dim_; ++i)
        if (rows_[i] != (uint64_t{1} << i)) return false;
    return true;
}

std::string BitMat::to_string() const {
    std::string s;
    for (unsigned i = 0; i < dim_; ++i) {
        for (unsigned j = 0; j < dim_; ++j) s.push_back(get(i, j) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

BitVec mat_apply(const BitMat& m, const BitVec& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("gf2::mat_apply: dimension mismatch");
    uint64_t out = 0;
    for (unsigned i = 0; i < m.dim(); ++i)
        out |= uint64_t{__builtin_popcountll(m.row(i) & v.bits()) & 1} << i;
    return BitVec(m.dim(), out);
}

BitMat mat_mul(const BitMat& a, const BitMat& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("gf2::mat_mul: dimension mismatch");
    BitMat c(a.dim());
    active_kernels().mat_mul(a.data(), b.data(), c.data(), a.dim());
    return c;
}

BitMat transpose(const BitMat& m) {
    BitMat t(m.dim());
    for (unsigned i = 0; i < m.dim(); ++i) {
        uint64_t bits = m.row(i);
        while (bits) {
            unsigned j = static_cast<unsigned>(__builtin_ctzll(bits));
            bits &= bits - 1;
            t.set(j, i, true);
        }
    }
    return t;
}

namespace {

// Elimination with partial pivoting by first set bit; returns rank, and the
// inverse through `inv` when requested and nonsingular.
unsigned eliminate(const BitMat& m, BitMat* inv) {
    unsigned n = m.dim();
    std::vector<uint64_t> a(n), b(n);
    for (unsigned i = 0; i < n; ++i) {
        a[i] = m.row(i);
        b[i] = uint64_t{1} << i;
    }
    unsigned r = 0;
    for (unsigned col = 0; col < n && r < n; ++col) {
        unsigned piv = n;
        for (unsigned i = r; i < n; ++i)
            if ((a[i] >> col) & 1) { piv = i; break; }
        if (piv == n) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        for (unsigned i = 0; i < n; ++i) {
            if (i != r && ((a[i] >> col) & 1)) {
                a[i] ^= a[r];
                b[i] ^= b[r];
            }
        }
        ++r;
    }
    if (inv && r == n) {
        // Rows ended ordered by pivot column, which is ascending, so b is m^{-1}.
        *inv = BitMat::from_rows(n, b);
    }
    return r;
}

}  // namespace

unsigned rank(const BitMat& m) { return eliminate(m, nullptr); }

std::optional<BitMat> mat_inverse(const BitMat& m) {
    BitMat inv(m.dim());
    if (eliminate(m, &inv) != m.dim()) return std::nullopt;
    return inv;
}

uint64_t mat_order(const BitMat& m) {
    constexpr uint64_t kCap = uint64_t{1} << 20;
    if (rank(m) != m.dim()) throw std::domain_error("gf2::mat_order: singular matrix");
    BitMat p = m;
    uint64_t k = 1;
    while (!p.is_identity()) {
        p = mat_mul(p, m);
        if (++k > kCap) throw std::runtime_error("gf2::mat_order: exceeded iteration cap");
    }
    return k;
}

BitMat permutation_matrix(unsigned dim, const std::vector<unsigned>& images) {
    if (images.size() != dim)
        throw std::invalid_argument("gf2::permutation_matrix: image list size != dim");
    BitMat m(dim);
    std::vector<bool> seen(dim, false);
    for (unsigned j = 0; j < dim; ++j) {
        unsigned i = images[j];
        if (i >= dim || seen[i])
            throw std::invalid_argument("gf2::permutation_matrix: images not a bijection");
        seen[i] = true;
        m.set(i, j, true);
    }
    return m;
}

}  // namespace crosscap::gf2
