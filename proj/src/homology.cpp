#include "crosscap/homology.hpp"

namespace crosscap::homology {

using gf2::BitMat;
using gf2::BitVec;

BitMat transvection(const BitVec& cls) {
    if (gf2::dot(cls, cls) != 0)
        throw NonIsotropicClass("transvection: class has odd self-intersection");
    unsigned n = cls.dim();
    BitMat m = BitMat::identity(n);
    for (unsigned i = 0; i < n; ++i)
        if (cls.get(i)) m.data()[i] ^= cls.bits();
    return m;
}

BitMat rotation_matrix(const surface::CrosscapModel& model) {
    std::vector<unsigned> images(model.genus);
    for (unsigned j = 0; j < model.genus; ++j)
        images[j] = model.rotate_index(j + 1, 1) - 1;
    return gf2::permutation_matrix(model.genus, images);
}

BitMat reflection_matrix(const surface::CurveTable& table) {
    unsigned g = table.model().genus;
    std::vector<unsigned> images(g);
    for (unsigned j = 0; j < g; ++j) images[j] = table.reflect_index(j + 1) - 1;
    return gf2::permutation_matrix(g, images);
}

BitMat eval_word(const words::MappingClassWord& w, const surface::CurveTable& table,
                 const ClassResolver* extra) {
    unsigned n = table.model().genus;
    BitMat acc = BitMat::identity(n);
    BitMat rot = rotation_matrix(table.model());
    std::optional<BitMat> rot_inv;
    for (const auto& t : w.tokens) {
        BitMat factor = BitMat::identity(n);
        switch (t.kind) {
            case words::GenToken::Kind::Sigma:
                factor = reflection_matrix(table);
                break;
            case words::GenToken::Kind::Rotation: {
                long k = t.exponent;
                if (k >= 0) {
                    for (long i = 0; i < k; ++i) factor = gf2::mat_mul(factor, rot);
                } else {
                    if (!rot_inv) rot_inv = *gf2::mat_inverse(rot);
                    for (long i = 0; i < -k; ++i) factor = gf2::mat_mul(factor, *rot_inv);
                }
                break;
            }
            case words::GenToken::Kind::Twist: {
                std::optional<BitVec> cls;
                if (extra) cls = (*extra)(t.name);
                if (!cls && table.has(t.name)) cls = table.curve_class(t.name);
                if (!cls) throw surface::UnknownCurve(t.name);
                if (cls->dim() != n)
                    throw std::invalid_argument("eval_word: genus mismatch for twist " + t.name);
                factor = transvection(*cls);  // exponent-blind mod 2
                break;
            }
        }
        acc = gf2::mat_mul(acc, factor);
    }
    return acc;
}

bool is_isometry(const BitMat& m) {
    return gf2::mat_mul(gf2::transpose(m), m).is_identity();
}

bool conjugation_check(const words::MappingClassWord& f, const std::string& curve,
                       const surface::CurveTable& table) {
    BitMat fm = eval_word(f, table);
    auto inv = gf2::mat_inverse(fm);
    if (!inv) return false;
    BitVec a = table.curve_class(curve);
    BitMat lhs = gf2::mat_mul(gf2::mat_mul(fm, transvection(a)), *inv);
    return lhs == transvection(gf2::mat_apply(fm, a));
}

std::optional<BitVec> transvection_class(const BitMat& m) {
    unsigned n = m.dim();
    uint64_t cls = 0;
    for (unsigned i = 0; i < n; ++i) {
        uint64_t d = m.row(i) ^ (uint64_t{1} << i);
        if (d) {
            cls = d;
            break;
        }
    }
    if (!cls) return std::nullopt;
    BitVec a(n, cls);
    if (gf2::dot(a, a) != 0) return std::nullopt;
    if (!(m == transvection(a))) return std::nullopt;
    return a;
}

}  // namespace crosscap::homology
