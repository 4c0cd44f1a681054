#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crosscap/gf2.hpp"

namespace crosscap::surface {

/// Crosscaps on a sphere: g on a circle for odd genus, g-1 on a circle plus a
/// central crosscap (index g) for even genus. The rotation T sends circle index
/// i to i+1 and fixes the center.
struct CrosscapModel {
    unsigned genus = 0;
    unsigned circle = 0;  // number of crosscaps on the circle
    bool has_center = false;

    /// T^k on a crosscap index (1-based).
    unsigned rotate_index(unsigned i, long k) const;
};

CrosscapModel build_model(unsigned genus);

struct Curve {
    std::string name;
    std::vector<unsigned> trace;  // cyclic sequence of distinct crosscap indices
    bool two_sided = true;
};

/// Canonical form of a cyclic trace: lexicographically least among all
/// rotations and reversals.
std::vector<unsigned> normalize_trace(const std::vector<unsigned>& trace);

/// A symbolic curve image has no matching named curve in the table. Signals an
/// incomplete table rather than a wrong identity.
struct NamedCurveMiss : std::runtime_error {
    explicit NamedCurveMiss(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCurve : std::runtime_error {
    explicit UnknownCurve(const std::string& name)
        : std::runtime_error("unknown curve name: " + name) {}
};

struct CurveDataError : std::runtime_error {
    explicit CurveDataError(const std::string& what) : std::runtime_error(what) {}
};

using Involution = std::vector<std::pair<unsigned, unsigned>>;  // swapped index pairs

class CurveTable {
public:
    CurveTable(CrosscapModel model, std::vector<Curve> curves,
               std::optional<Involution> reflection);

    const CrosscapModel& model() const { return model_; }
    const std::vector<Curve>& curves() const { return curves_; }
    bool has(const std::string& name) const { return by_name_.count(name) != 0; }
    const Curve& at(const std::string& name) const;

    /// Name of the curve whose trace equals T^k applied to `name`'s trace.
    std::string rotate_curve(const std::string& name, long k) const;
    /// Name of the reflection image of `name`.
    std::string reflect_curve(const std::string& name) const;

    gf2::BitVec curve_class(const std::string& name) const;
    gf2::BitVec class_of_trace(const std::vector<unsigned>& trace) const;

    /// Name owning the given trace, if any (first-registered wins on aliases).
    std::optional<std::string> name_of_trace(const std::vector<unsigned>& trace) const;

    bool has_reflection() const { return reflection_.has_value(); }
    /// Total involutive map on crosscap indices 1..g, as its swapped pairs.
    const Involution& reflection() const;
    unsigned reflect_index(unsigned i) const;

private:
    CrosscapModel model_;
    std::vector<Curve> curves_;
    std::map<std::string, size_t> by_name_;
    std::map<std::vector<unsigned>, size_t> by_trace_;  // normalized trace -> first curve
    std::optional<Involution> reflection_;
    std::vector<unsigned> refl_map_;  // 1-based total map when reflection_ set
};

/// Reflection index involution for the genera with built-in figure data.
Involution reflection_homology_images(const CrosscapModel& model);

/// Parse and validate a curve-spec document:
///   {"genus": N, "curves": [{"name": "...", "trace": [i, ...]}, ...]}
/// plus optional "reflection" (list of [i, j] swapped pairs) and "version".
CurveTable load_curves(const CrosscapModel& model, const std::string& json_text);

CurveTable load_curves_file(const CrosscapModel& model, const std::string& path);

/// Shipped table for genus 13 or 14 from the embedded defaults.
CurveTable builtin_table(unsigned genus);

/// Version string of an already-parsed document ("1" for the shipped files).
std::string document_version(const std::string& json_text);

}  // namespace crosscap::surface
