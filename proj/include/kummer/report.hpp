#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "kummer/cohomology.hpp"
#include "kummer/config.hpp"
#include "kummer/errors.hpp"
#include "kummer/fixed_loci.hpp"
#include "kummer/resolution.hpp"
#include "kummer/ring.hpp"

namespace kummer {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Computes the pipeline stages on demand and caches them, so that every
// command sees the same objects and a full report costs one pass.
class Pipeline {
public:
    explicit Pipeline(Config cfg) : cfg_(std::move(cfg)), group_(build_group(cfg_)) {}

    const Config& config() const { return cfg_; }
    const GroupZ2k& group() const { return group_; }

    const std::vector<SingularOrbit>& orbits() {
        if (!orbits_) orbits_ = singular_orbits(group_);
        return *orbits_;
    }

    const ConditionReport& joyce() {
        if (!joyce_) joyce_ = check_joyce_conditions(group_);
        return *joyce_;
    }

    const Pi1Report& pi1() {
        if (!pi1_) pi1_ = simply_connected_sufficient(group_);
        return *pi1_;
    }

    const GeneratorCatalogue& catalogue() {
        if (!cat_)
            cat_ = generator_catalogue(group_, orbits(),
                                       invariant_basis(group_, group_.dimension() - 4));
        return *cat_;
    }

    const RingTable& table() {
        if (!table_) table_ = ring_table(group_, catalogue());
        return *table_;
    }

private:
    Config cfg_;
    GroupZ2k group_;
    std::optional<std::vector<SingularOrbit>> orbits_;
    std::optional<ConditionReport> joyce_;
    std::optional<Pi1Report> pi1_;
    std::optional<GeneratorCatalogue> cat_;
    std::optional<RingTable> table_;
};

namespace reportdetail {

inline Json rationals_json(const std::map<int, Rational>& offsets) {
    Json a = Json::array();
    for (const auto& [i, v] : offsets) {
        (void)i;
        a.push_back(v.str());
    }
    return a;
}

inline Json betti_json(const std::vector<long long>& betti) {
    Json a = Json::array();
    for (long long b : betti) a.push_back(b);
    return a;
}

inline std::vector<int> pinned1(const AffineSubtorus& s) {
    std::vector<int> out;
    for (const auto& [i, v] : s.offsets) {
        (void)v;
        out.push_back(i + 1);
    }
    return out;
}

inline const char* kind_string(RingGenerator::Kind k) {
    switch (k) {
        case RingGenerator::Kind::T: return "t";
        case RingGenerator::Kind::TDual: return "t_dual";
        case RingGenerator::Kind::TDelta: return "t_delta";
        case RingGenerator::Kind::TDeltaDual: return "t_delta_dual";
        case RingGenerator::Kind::C: return "c";
        case RingGenerator::Kind::CLambda: return "c_lambda";
        case RingGenerator::Kind::CTauDual: return "c_tau_dual";
        case RingGenerator::Kind::CSigma: return "c_sigma";
        case RingGenerator::Kind::CDual: return "c_dual";
    }
    return "?";
}

// "-2", "8", or "-2*t{5,6,7}" for products landing on generators.
inline std::string product_string(const GeneratorCatalogue& cat, const RingElement& v) {
    if (v.dim == 0) return v.scalar.str();
    if (v.terms.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : v.terms) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*" + cat.generators[g].name;
    }
    return out;
}

}  // namespace reportdetail

inline Json group_json(const Pipeline& p) {
    const GroupZ2k& g = p.group();
    Json gens = Json::array();
    for (int j = 0; j < g.rank(); ++j) {
        const auto& m = g.generators()[std::size_t(j)];
        Json t = Json::array();
        for (int i = 0; i < m.dimension(); ++i) t.push_back(m.translation(i).str());
        gens.push_back({{"name", g.element_name(std::size_t(1) << j)},
                        {"signs", m.sign_string()},
                        {"translation", t}});
    }
    return {{"dimension", g.dimension()},
            {"order", g.order()},
            {"rank", g.rank()},
            {"generators", gens}};
}

inline Json fixed_loci_json(const GroupZ2k& g) {
    Json out = Json::array();
    for (std::size_t e = 1; e < g.order(); ++e) {
        auto locus = fixed_locus(g.element(e));
        Json rec = {{"element", g.element_name(e)}, {"count", locus.size()}};
        Json comps = Json::array();
        if (!locus.empty()) {
            rec["free"] = locus.front().free.name();
            rec["pinned"] = reportdetail::pinned1(locus.front());
            for (const auto& s : locus) comps.push_back(reportdetail::rationals_json(s.offsets));
        }
        rec["components"] = comps;
        out.push_back(std::move(rec));
    }
    return out;
}

inline Json orbits_json(const GroupZ2k& g, const std::vector<SingularOrbit>& orbits) {
    Json out = Json::array();
    std::map<std::size_t, int> rank;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& o = orbits[i];
        Json members = Json::array();
        for (const auto& m : o.members)
            members.push_back(reportdetail::rationals_json(m.offsets));
        out.push_back({{"index", i},
                       {"stabilizer", g.element_name(o.stabilizer)},
                       {"rank", ++rank[o.stabilizer]},
                       {"class", o.homology_class.name()},
                       {"size", o.members.size()},
                       {"pinned", reportdetail::pinned1(o.representative())},
                       {"representative", reportdetail::rationals_json(o.representative().offsets)},
                       {"members", members}});
    }
    return out;
}

inline Json joyce_json(const ConditionReport& r) {
    Json conditions = Json::array();
    for (const auto* e : r.entries()) {
        Json w = Json::array();
        for (const auto& s : e->witnesses) w.push_back(s);
        conditions.push_back({{"id", e->id}, {"passed", e->passed}, {"witnesses", w}});
    }
    return {{"all_passed", r.all_passed()},
            {"component_count", r.component_count},
            {"orbit_count", r.orbit_count},
            {"conditions", conditions}};
}

inline Json pi1_coverage_json(const GroupZ2k& g, const Pi1Report& r) {
    Json out = Json::array();
    for (std::size_t i = 0; i < r.covered_by.size(); ++i) {
        Json gens = Json::array();
        for (int j : r.covered_by[i]) gens.push_back(g.element_name(std::size_t(1) << j));
        out.push_back({{"coordinate", i + 1}, {"generators", gens}});
    }
    return out;
}

inline Json catalogue_json(const GeneratorCatalogue& cat) {
    Json out = Json::array();
    for (const auto& g : cat.generators)
        out.push_back({{"name", g.name},
                       {"kind", reportdetail::kind_string(g.kind)},
                       {"dim", g.dim}});
    return out;
}

inline Json relations_json(const RingTable& table) {
    Json out = Json::array();
    const auto& cat = table.catalogue();
    for (const auto& e : table.nontrivial_entries())
        out.push_back({{"a", cat.generators[e.a].name},
                       {"b", cat.generators[e.b].name},
                       {"product", reportdetail::product_string(cat, e.product.value)}});
    return out;
}

inline Json pairings_json(const RingTable& table, int only_k = -1) {
    Json out = Json::array();
    auto push = [&](int k) {
        auto m = pairing_matrix(table, k);
        out.push_back(
            {{"k", k}, {"size", m.rows.size()}, {"determinant", m.determinant.str()}});
    };
    if (only_k >= 0) {
        push(only_k);  // out-of-range degrees throw
        return out;
    }
    for (int k = 0; k <= table.catalogue().n; ++k)
        if (table.catalogue().count_of_dim(k) != 0) push(k);
    return out;
}

inline Json massey_json(const RingTable& table) {
    auto candidates = massey_candidates(table);
    const auto& cat = table.catalogue();
    Json sample = Json::array();
    for (std::size_t i = 0; i < candidates.size() && i < 5; ++i)
        sample.push_back({cat.generators[candidates[i].a].name,
                          cat.generators[candidates[i].b].name,
                          cat.generators[candidates[i].c].name});
    return {{"count", candidates.size()}, {"sample", sample}};
}

inline Json full_report_json(Pipeline& p) {
    return {{"schema_version", kSchemaVersion},
            {"group", group_json(p)},
            {"orbifold_betti", reportdetail::betti_json(orbifold_betti(p.group()))},
            {"fixed_loci", fixed_loci_json(p.group())},
            {"orbits", orbits_json(p.group(), p.orbits())},
            {"joyce_conditions", joyce_json(p.joyce())},
            {"pi1_sufficient", p.pi1().sufficient},
            {"resolved_betti",
             reportdetail::betti_json(resolved_betti(p.group(), p.orbits()))},
            {"generators", catalogue_json(p.catalogue())},
            {"relations", relations_json(p.table())},
            {"pairings", pairings_json(p.table())},
            {"massey_candidates", massey_json(p.table())}};
}

// ---------------------------------------------------------------------------
// Plain-text rendering. The same data as the JSON documents, formatted as
// small aligned tables; color is opt-in and limited to verdict words.

namespace reportdetail {

struct Palette {
    bool on = false;
    std::string good(const std::string& s) const {
        return on ? "\x1b[32m" + s + "\x1b[0m" : s;
    }
    std::string bad(const std::string& s) const {
        return on ? "\x1b[31m" + s + "\x1b[0m" : s;
    }
    std::string head(const std::string& s) const {
        return on ? "\x1b[1m" + s + "\x1b[0m" : s;
    }
};

inline std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string offsets_text(const Json& offsets) {
    std::string out = "(";
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i) out += ", ";
        out += offsets[i].get<std::string>();
    }
    return out + ")";
}

inline std::string betti_text(const Json& betti) {
    std::string out = "(";
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(betti[i].get<long long>());
    }
    return out + ")";
}

inline std::string group_text(const Json& g, const Palette& c) {
    std::string out = c.head("group") + "\n";
    out += "  dimension  " + std::to_string(g["dimension"].get<int>()) + "\n";
    out += "  order      " + std::to_string(g["order"].get<std::size_t>()) + "\n";
    out += "  rank       " + std::to_string(g["rank"].get<int>()) + "\n";
    for (const auto& gen : g["generators"]) {
        out += "  " + gen["name"].get<std::string>() + "  " +
               gen["signs"].get<std::string>() + "  " +
               offsets_text(gen["translation"]) + "\n";
    }
    return out;
}

inline std::string fixed_loci_text(const Json& loci, const Palette& c) {
    std::string out = c.head("fixed loci") + "\n";
    for (const auto& rec : loci) {
        out += "  element " + rec["element"].get<std::string>() + "  components " +
               std::to_string(rec["count"].get<std::size_t>());
        if (rec.contains("free")) out += "  free " + rec["free"].get<std::string>();
        out += "\n";
        for (const auto& comp : rec["components"]) out += "    " + offsets_text(comp) + "\n";
    }
    return out;
}

inline std::string orbits_text(const Json& orbits, const Palette& c) {
    std::string out = c.head("singular orbits") + "\n";
    for (const auto& o : orbits) {
        out += "  #" + std::to_string(o["index"].get<std::size_t>()) + "  stabilizer " +
               o["stabilizer"].get<std::string>() + "  rank " +
               std::to_string(o["rank"].get<int>()) + "  class " +
               o["class"].get<std::string>() + "  size " +
               std::to_string(o["size"].get<std::size_t>()) + "\n    ";
        for (std::size_t i = 0; i < o["members"].size(); ++i) {
            if (i) out += "  ";
            out += offsets_text(o["members"][i]);
        }
        out += "\n";
    }
    return out;
}

inline std::string joyce_text(const Json& j, const Palette& c) {
    std::string out = c.head("resolvability conditions") + "\n";
    for (const auto& cond : j["conditions"]) {
        bool ok = cond["passed"].get<bool>();
        out += "  " + pad(cond["id"].get<std::string>(), 29) +
               (ok ? c.good("PASS") : c.bad("FAIL")) + "\n";
        for (const auto& w : cond["witnesses"])
            out += "    - " + w.get<std::string>() + "\n";
    }
    out += "  components " + std::to_string(j["component_count"].get<std::size_t>()) +
           ", orbits " + std::to_string(j["orbit_count"].get<std::size_t>()) + "\n";
    bool all = j["all_passed"].get<bool>();
    out += "  overall " + (all ? c.good("PASS") : c.bad("FAIL")) + "\n";
    return out;
}

inline std::string pi1_text(bool sufficient, const Json& coverage, const Palette& c) {
    std::string out = c.head("fundamental group") + "\n";
    out += "  sufficient condition " +
           (sufficient ? c.good("holds") : c.bad("does not hold")) + "\n";
    for (const auto& row : coverage) {
        out += "  coordinate " + std::to_string(row["coordinate"].get<int>()) +
               " reflected by";
        if (row["generators"].empty()) out += " " + c.bad("none");
        for (const auto& g : row["generators"]) out += " " + g.get<std::string>();
        out += "\n";
    }
    return out;
}

inline std::string catalogue_text(const Json& gens, const Palette& c) {
    std::string out = c.head("homology generators") + "\n";
    int last_dim = -1;
    for (const auto& g : gens) {
        int d = g["dim"].get<int>();
        if (d != last_dim) {
            out += "  dimension " + std::to_string(d) + "\n";
            last_dim = d;
        }
        out += "    " + pad(g["name"].get<std::string>(), 14) +
               g["kind"].get<std::string>() + "\n";
    }
    return out;
}

inline std::string relations_text(const Json& rels, const Palette& c) {
    std::string out =
        c.head("nonzero products (" + std::to_string(rels.size()) + ")") + "\n";
    for (const auto& r : rels)
        out += "  " + pad(r["a"].get<std::string>(), 14) + ". " +
               pad(r["b"].get<std::string>(), 14) + "= " +
               r["product"].get<std::string>() + "\n";
    return out;
}

inline std::string pairings_text(const Json& pairings, const Palette& c) {
    std::string out = c.head("intersection pairings") + "\n";
    for (const auto& p : pairings)
        out += "  k=" + std::to_string(p["k"].get<int>()) + "  size " +
               std::to_string(p["size"].get<std::size_t>()) + "  determinant " +
               p["determinant"].get<std::string>() + "\n";
    return out;
}

inline std::string massey_text(const Json& m, const Palette& c) {
    std::string out = c.head("triple product slots") + "\n";
    out += "  candidates " + std::to_string(m["count"].get<std::size_t>()) + "\n";
    for (const auto& s : m["sample"])
        out += "  sample (" + s[0].get<std::string>() + ", " + s[1].get<std::string>() +
               ", " + s[2].get<std::string>() + ")\n";
    return out;
}

}  // namespace reportdetail

// ---------------------------------------------------------------------------
// Command driver shared by the CLI and the tests.

struct CommandOutput {
    Json json;
    std::string text;
};

// Runs one pipeline command on a parsed configuration. `k` restricts the
// pairing command to a single degree when non-negative; `color` only
// affects the text rendering.
inline CommandOutput run(const std::string& command, const Config& cfg, int k = -1,
                         bool color = false) {
    Pipeline p(cfg);
    reportdetail::Palette pal{color};
    CommandOutput out;
    out.json["schema_version"] = kSchemaVersion;

    if (command == "validate") {
        out.json["group"] = group_json(p);
        out.json["valid"] = true;
        out.text = reportdetail::group_text(out.json["group"], pal) + "  " +
                   pal.good("valid") + "\n";
    } else if (command == "betti") {
        out.json["orbifold_betti"] = reportdetail::betti_json(orbifold_betti(p.group()));
        out.json["resolved_betti"] =
            reportdetail::betti_json(resolved_betti(p.group(), p.orbits()));
        out.text = pal.head("betti numbers") + "\n  orbifold " +
                   reportdetail::betti_text(out.json["orbifold_betti"]) + "\n  resolved " +
                   reportdetail::betti_text(out.json["resolved_betti"]) + "\n";
    } else if (command == "fixed-loci") {
        out.json["fixed_loci"] = fixed_loci_json(p.group());
        out.text = reportdetail::fixed_loci_text(out.json["fixed_loci"], pal);
    } else if (command == "orbits") {
        out.json["orbits"] = orbits_json(p.group(), p.orbits());
        out.text = reportdetail::orbits_text(out.json["orbits"], pal);
    } else if (command == "check") {
        out.json["joyce_conditions"] = joyce_json(p.joyce());
        out.text = reportdetail::joyce_text(out.json["joyce_conditions"], pal);
    } else if (command == "pi1") {
        out.json["pi1_sufficient"] = p.pi1().sufficient;
        out.json["pi1_coverage"] = pi1_coverage_json(p.group(), p.pi1());
        out.text = reportdetail::pi1_text(p.pi1().sufficient, out.json["pi1_coverage"], pal);
    } else if (command == "resolve") {
        auto betti = resolved_betti(p.group(), p.orbits());
        long long euler = 0;
        long long sign = 1;
        for (long long b : betti) {
            euler += sign * b;
            sign = -sign;
        }
        out.json["resolved_betti"] = reportdetail::betti_json(betti);
        out.json["euler_characteristic"] = euler;
        out.text = pal.head("resolution") + "\n  resolved betti " +
                   reportdetail::betti_text(out.json["resolved_betti"]) +
                   "\n  euler characteristic " + std::to_string(euler) + "\n";
    } else if (command == "ring") {
        out.json["relations"] = relations_json(p.table());
        out.text = reportdetail::relations_text(out.json["relations"], pal);
    } else if (command == "pairing") {
        out.json["pairings"] = pairings_json(p.table(), k);
        out.text = reportdetail::pairings_text(out.json["pairings"], pal);
    } else if (command == "massey") {
        out.json["massey_candidates"] = massey_json(p.table());
        out.text = reportdetail::massey_text(out.json["massey_candidates"], pal);
    } else if (command == "report") {
        out.json = full_report_json(p);
        out.text = reportdetail::group_text(out.json["group"], pal);
        out.text += pal.head("betti numbers") + "\n  orbifold " +
                    reportdetail::betti_text(out.json["orbifold_betti"]) + "\n  resolved " +
                    reportdetail::betti_text(out.json["resolved_betti"]) + "\n";
        out.text += reportdetail::fixed_loci_text(out.json["fixed_loci"], pal);
        out.text += reportdetail::orbits_text(out.json["orbits"], pal);
        out.text += reportdetail::joyce_text(out.json["joyce_conditions"], pal);
        out.text += reportdetail::pi1_text(out.json["pi1_sufficient"].get<bool>(),
                                           pi1_coverage_json(p.group(), p.pi1()), pal);
        out.text += reportdetail::catalogue_text(out.json["generators"], pal);
        out.text += reportdetail::relations_text(out.json["relations"], pal);
        out.text += reportdetail::pairings_text(out.json["pairings"], pal);
        out.text += reportdetail::massey_text(out.json["massey_candidates"], pal);
    } else {
        throw std::invalid_argument("unknown command `" + command + "`");
    }
    return out;
}

// Structured record for any failure, used by the CLI for stderr/stdout
// reporting with a nonzero exit status.
inline std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return "config";
    if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension-mismatch";
    if (dynamic_cast<const NonInvolutive*>(&e)) return "non-involutive";
    if (dynamic_cast<const NonCommuting*>(&e)) return "non-commuting";
    if (dynamic_cast<const NotEffective*>(&e)) return "not-effective";
    if (dynamic_cast<const OverlappingLoci*>(&e)) return "overlapping-loci";
    if (dynamic_cast<const InconsistentClaims*>(&e)) return "inconsistent-claims";
    if (dynamic_cast<const NonComplementary*>(&e)) return "non-complementary";
    if (dynamic_cast<const DimensionTooLow*>(&e)) return "dimension-too-low";
    if (dynamic_cast<const Error*>(&e)) return "domain";
    if (dynamic_cast<const std::invalid_argument*>(&e)) return "usage";
    return "internal";
}

inline Json error_json(const std::exception& e) {
    Json rec = {{"kind", error_kind(e)}, {"message", e.what()}};
    if (const auto* c = dynamic_cast<const ConfigError*>(&e)) rec["line"] = c->line();
    return {{"schema_version", kSchemaVersion}, {"error", rec}};
}

}  // namespace kummer
