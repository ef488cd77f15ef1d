#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/group.hpp"
#include "kummer/subtorus.hpp"

namespace kummer {

// Fixed-point set of one affine involution, as a sorted list of disjoint
// affine subtori.
//
// Coordinatewise: a reflected coordinate (sign -1, map x -> b - x) is
// fixed exactly at the two offsets b/2 and b/2 + 1/2; a preserved
// coordinate (sign +1, map x -> x + b) is fixed on the whole circle when
// b = 0 and nowhere otherwise. The locus is therefore empty or a union
// of 2^(#reflected) parallel subtori free in the preserved coordinates,
// listed here in lexicographic offset order.
inline std::vector<AffineSubtorus> fixed_locus(const AffineInvolutionMap& g) {
    std::vector<int> reflected;
    for (int i = 0; i < g.dimension(); ++i) {
        if (g.sign(i) == 1) {
            if (!g.translation(i).is_zero()) return {};
        } else {
            reflected.push_back(i);
        }
    }
    Monomial free(0);
    for (int i = 0; i < g.dimension(); ++i)
        if (g.sign(i) == 1) free.bits |= 1ull << i;

    std::vector<AffineSubtorus> out;
    std::size_t count = std::size_t(1) << reflected.size();
    for (std::size_t choice = 0; choice < count; ++choice) {
        std::map<int, Rational> offsets;
        for (std::size_t r = 0; r < reflected.size(); ++r) {
            int i = reflected[r];
            Rational base = (g.translation(i) / Rational(2)).mod1();
            if ((choice >> r) & 1u) base = (base + Rational(1, 2)).mod1();
            offsets[i] = base;
        }
        out.emplace_back(g.dimension(), free, std::move(offsets));
    }
    std::sort(out.begin(), out.end(),
              [](const AffineSubtorus& a, const AffineSubtorus& b) { return a.less_set(b); });
    return out;
}

// One group orbit of fixed subtori. The stabilizer index names the group
// element whose fixed locus the members came from; members are sorted and
// the representative is the lexicographically least member.
struct SingularOrbit {
    std::size_t stabilizer = 0;             // element index in the group
    std::vector<AffineSubtorus> members;    // sorted, distinct point sets
    Monomial homology_class;                // free-coordinate monomial, coefficient +1

    const AffineSubtorus& representative() const { return members.front(); }
};

namespace detail {

struct Component {
    std::size_t element;  // fixing element index
    AffineSubtorus torus;
};

inline std::vector<Component> collect_components(const GroupZ2k& group) {
    std::vector<Component> out;
    for (std::size_t e = 1; e < group.order(); ++e)
        for (AffineSubtorus& s : fixed_locus(group.element(e)))
            out.push_back({e, std::move(s)});
    return out;
}

inline std::vector<SingularOrbit> collect_orbits(const GroupZ2k& group,
                                                 const std::vector<Component>& components) {
    std::vector<SingularOrbit> orbits;
    for (const auto& c : components) {
        std::vector<AffineSubtorus> orbit;
        for (const auto& h : group.elements()) {
            AffineSubtorus image = apply_map(h, c.torus);
            bool seen = false;
            for (const auto& m : orbit)
                if (m.same_set(image)) {
                    seen = true;
                    break;
                }
            if (!seen) orbit.push_back(std::move(image));
        }
        std::sort(orbit.begin(), orbit.end(),
                  [](const AffineSubtorus& a, const AffineSubtorus& b) {
                      return a.less_set(b);
                  });
        for (auto& m : orbit) m.orientation = 1;
        bool duplicate = false;
        for (const auto& o : orbits)
            if (o.stabilizer == c.element && o.members.front().same_set(orbit.front())) {
                duplicate = true;
                break;
            }
        if (!duplicate)
            orbits.push_back({c.element, std::move(orbit), c.torus.free});
    }
    std::sort(orbits.begin(), orbits.end(), [](const SingularOrbit& a, const SingularOrbit& b) {
        if (a.stabilizer != b.stabilizer) return a.stabilizer < b.stabilizer;
        return a.representative().less_set(b.representative());
    });
    return orbits;
}

}  // namespace detail

// Group orbits of all fixed subtori of non-identity elements, sorted by
// (stabilizer index, representative). Throws OverlappingLoci when fixed
// components of two different elements meet, since the singular set then
// has no disjoint product neighborhoods.
inline std::vector<SingularOrbit> singular_orbits(const GroupZ2k& group) {
    auto components = detail::collect_components(group);
    for (std::size_t a = 0; a < components.size(); ++a)
        for (std::size_t b = a + 1; b < components.size(); ++b) {
            if (components[a].element == components[b].element) continue;
            if (components[a].torus.intersects(components[b].torus))
                throw OverlappingLoci(
                    "fixed components of elements " + group.element_name(components[a].element) +
                    " and " + group.element_name(components[b].element) + " intersect");
        }
    return detail::collect_orbits(group, components);
}

// Offsets of a subtorus as "(0, 1/2, 1/4)" over pinned coordinates in
// ascending order; used in witnesses and reports.
inline std::string offsets_string(const AffineSubtorus& s) {
    std::string out = "(";
    bool first = true;
    for (const auto& [i, v] : s.offsets) {
        (void)i;
        if (!first) out += ", ";
        out += v.str();
        first = false;
    }
    return out + ")";
}

// Resolvability checklist for the quotient. Every condition is reported
// with witnesses instead of throwing, so a failing group still yields a
// full diagnosis:
//   (a) every composite (non-generator) element acts freely,
//   (b) every generator with fixed points reflects exactly 4 coordinates,
//   (c) the setwise stabilizer of each fixed component is exactly the
//       order-2 subgroup generated by its fixing involution,
//   (d) all fixed components are pairwise disjoint.
struct ConditionReport {
    struct Entry {
        std::string id;
        bool passed = true;
        std::vector<std::string> witnesses;
    };

    Entry composites_act_freely;
    Entry components_are_codimension_4;
    Entry stabilizers_are_minimal;
    Entry components_are_disjoint;
    std::size_t component_count = 0;
    std::size_t orbit_count = 0;

    bool all_passed() const {
        return composites_act_freely.passed && components_are_codimension_4.passed &&
               stabilizers_are_minimal.passed && components_are_disjoint.passed;
    }

    std::vector<const Entry*> entries() const {
        return {&composites_act_freely, &components_are_codimension_4,
                &stabilizers_are_minimal, &components_are_disjoint};
    }
};

inline ConditionReport check_joyce_conditions(const GroupZ2k& group) {
    ConditionReport report;
    report.composites_act_freely.id = "composites_act_freely";
    report.components_are_codimension_4.id = "components_are_codimension_4";
    report.stabilizers_are_minimal.id = "stabilizers_are_minimal";
    report.components_are_disjoint.id = "components_are_disjoint";

    for (std::size_t e = 1; e < group.order(); ++e) {
        if (std::popcount(e) < 2) continue;
        if (!fixed_locus(group.element(e)).empty()) {
            report.composites_act_freely.passed = false;
            report.composites_act_freely.witnesses.push_back(
                "element " + group.element_name(e) + " has fixed points");
        }
    }

    for (int j = 0; j < group.rank(); ++j) {
        const auto& g = group.generators()[j];
        if (fixed_locus(g).empty()) continue;
        int reflected = 0;
        for (int i = 0; i < g.dimension(); ++i)
            if (g.sign(i) == -1) ++reflected;
        if (reflected != 4) {
            report.components_are_codimension_4.passed = false;
            report.components_are_codimension_4.witnesses.push_back(
                "generator " + group.element_name(std::size_t(1) << j) + " reflects " +
                std::to_string(reflected) + " coordinates");
        }
    }

    auto components = detail::collect_components(group);
    report.component_count = components.size();

    for (const auto& c : components) {
        std::size_t stab = 0;
        for (std::size_t e = 0; e < group.order(); ++e)
            if (apply_map(group.element(e), c.torus).same_set(c.torus)) ++stab;
        if (stab != 2) {
            report.stabilizers_are_minimal.passed = false;
            report.stabilizers_are_minimal.witnesses.push_back(
                "component of " + group.element_name(c.element) + " at " +
                offsets_string(c.torus) + " has setwise stabilizer of order " +
                std::to_string(stab));
        }
    }

    for (std::size_t a = 0; a < components.size(); ++a)
        for (std::size_t b = a + 1; b < components.size(); ++b) {
            if (!components[a].torus.same_set(components[b].torus) &&
                !components[a].torus.intersects(components[b].torus))
                continue;
            if (components[a].element == components[b].element &&
                !components[a].torus.same_set(components[b].torus))
                continue;  // parallel components of one element never meet
            report.components_are_disjoint.passed = false;
            report.components_are_disjoint.witnesses.push_back(
                "components of " + group.element_name(components[a].element) + " and " +
                group.element_name(components[b].element) + " intersect");
        }

    report.orbit_count = detail::collect_orbits(group, components).size();
    return report;
}

// Sufficient (not necessary) simple-connectedness test for the resolved
// quotient: every coordinate circle must be reflected by some generator
// that has fixed points, so the circle projects into a simply connected
// 4-quotient factor. Returns the verdict with per-coordinate witnesses.
struct Pi1Report {
    bool sufficient = false;
    // covered_by[i]: generator indices reflecting coordinate i with
    // nonempty fixed locus.
    std::vector<std::vector<int>> covered_by;
};

inline Pi1Report simply_connected_sufficient(const GroupZ2k& group) {
    Pi1Report report;
    report.covered_by.assign(group.dimension(), {});
    std::vector<bool> has_fixed(group.rank());
    for (int j = 0; j < group.rank(); ++j)
        has_fixed[j] = !fixed_locus(group.generators()[j]).empty();
    for (int i = 0; i < group.dimension(); ++i)
        for (int j = 0; j < group.rank(); ++j)
            if (has_fixed[j] && group.generators()[j].sign(i) == -1)
                report.covered_by[i].push_back(j);
    report.sufficient = true;
    for (const auto& v : report.covered_by)
        if (v.empty()) report.sufficient = false;
    return report;
}

}  // namespace kummer
