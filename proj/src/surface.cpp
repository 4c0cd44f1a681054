#include "crosscap/surface.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "crosscap/embedded_data.hpp"

namespace crosscap::surface {

unsigned CrosscapModel::rotate_index(unsigned i, long k) const {
    if (has_center && i == genus) return i;
    long c = static_cast<long>(circle);
    long j = (static_cast<long>(i) - 1 + k) % c;
    if (j < 0) j += c;
    return static_cast<unsigned>(j) + 1;
}

CrosscapModel build_model(unsigned genus) {
    if (genus < 7)
        throw std::invalid_argument("build_model: genus must be >= 7, got " +
                                    std::to_string(genus));
    if (genus > gf2::kMaxDim)
        throw std::invalid_argument("build_model: genus exceeds supported maximum " +
                                    std::to_string(gf2::kMaxDim));
    CrosscapModel m;
    m.genus = genus;
    if (genus % 2 == 1) {
        m.circle = genus;
        m.has_center = false;
    } else {
        m.circle = genus - 1;
        m.has_center = true;
    }
    return m;
}

std::vector<unsigned> normalize_trace(const std::vector<unsigned>& trace) {
    if (trace.empty()) return trace;
    std::vector<unsigned> best;
    auto consider = [&](std::vector<unsigned> cand) {
        for (size_t s = 0; s < cand.size(); ++s) {
            if (best.empty() || cand < best) best = cand;
            std::rotate(cand.begin(), cand.begin() + 1, cand.end());
        }
    };
    consider(trace);
    std::vector<unsigned> rev(trace.rbegin(), trace.rend());
    consider(rev);
    return best;
}

namespace {

void validate_curve(const CrosscapModel& model, const Curve& c) {
    if (c.trace.empty()) throw CurveDataError("curve '" + c.name + "': empty trace");
    std::set<unsigned> seen;
    for (unsigned i : c.trace) {
        if (i < 1 || i > model.genus)
            throw CurveDataError("curve '" + c.name + "': crosscap index " + std::to_string(i) +
                                 " outside 1.." + std::to_string(model.genus));
        if (!seen.insert(i).second)
            throw CurveDataError("curve '" + c.name + "': duplicate crosscap index " +
                                 std::to_string(i));
    }
    if (c.two_sided && c.trace.size() % 2 != 0)
        throw CurveDataError("curve '" + c.name +
                             "': two-sided curve has non-isotropic class (odd trace)");
}

std::vector<unsigned> apply_index_map(const std::vector<unsigned>& trace,
                                      const std::vector<unsigned>& map1based) {
    std::vector<unsigned> out;
    out.reserve(trace.size());
    for (unsigned i : trace) out.push_back(map1based[i]);
    return out;
}

}  // namespace

CurveTable::CurveTable(CrosscapModel model, std::vector<Curve> curves,
                       std::optional<Involution> reflection)
    : model_(model), curves_(std::move(curves)), reflection_(std::move(reflection)) {
    for (size_t i = 0; i < curves_.size(); ++i) {
        validate_curve(model_, curves_[i]);
        if (!by_name_.emplace(curves_[i].name, i).second)
            throw CurveDataError("duplicate curve name: " + curves_[i].name);
        // class check: the mod-2 self-intersection of any two-sided curve vanishes
        auto cls = class_of_trace(curves_[i].trace);
        if (curves_[i].two_sided && gf2::dot(cls, cls) != 0)
            throw CurveDataError("curve '" + curves_[i].name + "': class is not isotropic");
        by_trace_.emplace(normalize_trace(curves_[i].trace), i);  // first registration wins
    }
    if (reflection_) {
        refl_map_.assign(model_.genus + 1, 0);
        for (unsigned i = 1; i <= model_.genus; ++i) refl_map_[i] = i;
        std::set<unsigned> touched;
        for (auto [a, b] : *reflection_) {
            if (a < 1 || a > model_.genus || b < 1 || b > model_.genus || a == b)
                throw CurveDataError("reflection: bad swap pair");
            if (!touched.insert(a).second || !touched.insert(b).second)
                throw CurveDataError("reflection: index appears in two pairs");
            refl_map_[a] = b;
            refl_map_[b] = a;
        }
        for (unsigned i = 1; i <= model_.genus; ++i)
            if (refl_map_[refl_map_[i]] != i)
                throw CurveDataError("reflection: map is not an involution");
    }
}

const Curve& CurveTable::at(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw UnknownCurve(name);
    return curves_[it->second];
}

std::optional<std::string> CurveTable::name_of_trace(const std::vector<unsigned>& trace) const {
    auto it = by_trace_.find(normalize_trace(trace));
    if (it == by_trace_.end()) return std::nullopt;
    return curves_[it->second].name;
}

std::string CurveTable::rotate_curve(const std::string& name, long k) const {
    const Curve& c = at(name);
    std::vector<unsigned> img;
    img.reserve(c.trace.size());
    for (unsigned i : c.trace) img.push_back(model_.rotate_index(i, k));
    auto hit = name_of_trace(img);
    if (!hit)
        throw NamedCurveMiss("rotate_curve: T^" + std::to_string(k) + "(" + name +
                             ") matches no named curve");
    return *hit;
}

unsigned CurveTable::reflect_index(unsigned i) const {
    if (!reflection_) throw CurveDataError("table has no reflection data");
    return refl_map_[i];
}

std::string CurveTable::reflect_curve(const std::string& name) const {
    const Curve& c = at(name);
    if (!reflection_) throw CurveDataError("reflect_curve: table has no reflection data");
    auto img = apply_index_map(c.trace, refl_map_);
    auto hit = name_of_trace(img);
    if (!hit) throw NamedCurveMiss("reflect_curve: sigma(" + name + ") matches no named curve");
    return *hit;
}

gf2::BitVec CurveTable::class_of_trace(const std::vector<unsigned>& trace) const {
    gf2::BitVec v(model_.genus);
    for (unsigned i : trace) v.set(i - 1, !v.get(i - 1));
    return v;
}

gf2::BitVec CurveTable::curve_class(const std::string& name) const {
    return class_of_trace(at(name).trace);
}

const Involution& CurveTable::reflection() const {
    if (!reflection_) throw CurveDataError("table has no reflection data");
    return *reflection_;
}

Involution reflection_homology_images(const CrosscapModel& model) {
    if (model.genus == 13) return {{1, 3}, {2, 6}, {4, 5}, {7, 8}, {9, 11}, {10, 12}};
    if (model.genus == 14) return {{1, 14}, {2, 3}, {4, 7}, {5, 6}, {10, 11}};
    throw CurveDataError(
        "no built-in reflection data for genus " + std::to_string(model.genus) +
        "; supply a curve file with a \"reflection\" field");
}

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw CurveDataError(std::string("malformed curve document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("genus") || !doc.contains("curves"))
        throw CurveDataError("curve document must be an object with 'genus' and 'curves'");
    return doc;
}

std::vector<std::string> required_names(unsigned genus) {
    std::vector<std::string> req = {"a1", "a2", "e", "f"};
    unsigned r = (genus % 2 == 1) ? (genus - 1) / 2 : (genus - 2) / 2;
    for (unsigned i = 1; i <= r; ++i) req.push_back("b" + std::to_string(i));
    for (unsigned i = 1; i + 1 <= r; ++i) req.push_back("c" + std::to_string(i));
    for (unsigned i = 1; i <= genus; ++i) req.push_back("gamma" + std::to_string(i));
    if (genus % 2 == 0) req.push_back("d" + std::to_string(r));
    return req;
}

}  // namespace

CurveTable load_curves(const CrosscapModel& model, const std::string& json_text) {
    json doc = parse_document(json_text);
    if (!doc["genus"].is_number_unsigned() || doc["genus"].get<unsigned>() != model.genus)
        throw CurveDataError("curve document genus does not match the model");
    std::vector<Curve> curves;
    for (const auto& entry : doc["curves"]) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("trace"))
            throw CurveDataError("curve entries need 'name' and 'trace'");
        Curve c;
        c.name = entry["name"].get<std::string>();
        for (const auto& idx : entry["trace"]) {
            if (!idx.is_number_unsigned()) throw CurveDataError("trace indices must be integers");
            c.trace.push_back(idx.get<unsigned>());
        }
        curves.push_back(std::move(c));
    }
    std::set<std::string> have;
    for (const auto& c : curves) have.insert(c.name);
    for (const auto& name : required_names(model.genus))
        if (!have.count(name)) throw CurveDataError("required curve missing from table: " + name);

    std::optional<Involution> refl;
    if (doc.contains("reflection")) {
        Involution inv;
        for (const auto& pr : doc["reflection"]) {
            if (!pr.is_array() || pr.size() != 2)
                throw CurveDataError("reflection entries must be [i, j] pairs");
            inv.emplace_back(pr[0].get<unsigned>(), pr[1].get<unsigned>());
        }
        refl = std::move(inv);
    } else if (model.genus == 13 || model.genus == 14) {
        refl = reflection_homology_images(model);
    }
    return CurveTable(model, std::move(curves), std::move(refl));
}

CurveTable load_curves_file(const CrosscapModel& model, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CurveDataError("cannot open curve file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_curves(model, ss.str());
}

CurveTable builtin_table(unsigned genus) {
    return load_curves(build_model(genus), embedded_curve_document(genus));
}

std::string document_version(const std::string& json_text) {
    json doc = parse_document(json_text);
    if (doc.contains("version")) {
        if (doc["version"].is_string()) return doc["version"].get<std::string>();
        return doc["version"].dump();
    }
    return "unversioned";
}

}  // namespace crosscap::surface
