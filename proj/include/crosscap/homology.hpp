#pragma once

#include <functional>
#include <optional>
#include <string>

#include "crosscap/gf2.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/words.hpp"

namespace crosscap::homology {

struct NonIsotropicClass : std::invalid_argument {
    explicit NonIsotropicClass(const std::string& what) : std::invalid_argument(what) {}
};

/// Mod-2 action of a Dehn twist about a two-sided curve with class `cls`:
/// v -> v + (v . cls) cls. Requires cls isotropic.
gf2::BitMat transvection(const gf2::BitVec& cls);

/// Permutation matrix of the rotation T on crosscap classes.
gf2::BitMat rotation_matrix(const surface::CrosscapModel& model);

/// Permutation matrix of the reflection on crosscap classes.
gf2::BitMat reflection_matrix(const surface::CurveTable& table);

/// Resolves twist names that are not table entries (derived classes such as
/// d1, d2, a3 produced while running a ledger).
using ClassResolver = std::function<std::optional<gf2::BitVec>(const std::string&)>;

/// Product of the token matrices in written order; the rightmost token acts
/// first. Twist exponents are irrelevant mod 2.
gf2::BitMat eval_word(const words::MappingClassWord& w, const surface::CurveTable& table,
                      const ClassResolver* extra = nullptr);

/// Does M preserve the mod-2 intersection pairing, i.e. M^T M = I?
bool is_isometry(const gf2::BitMat& m);

/// eval(f) . transvection([a]) . eval(f)^-1 == transvection(eval(f)[a]).
bool conjugation_check(const words::MappingClassWord& f, const std::string& curve,
                       const surface::CurveTable& table);

/// If m is a transvection, its class; otherwise nullopt.
std::optional<gf2::BitVec> transvection_class(const gf2::BitMat& m);

}  // namespace crosscap::homology
