#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kummer/cohomology.hpp"
#include "kummer/errors.hpp"
#include "kummer/exterior.hpp"
#include "kummer/fixed_loci.hpp"
#include "kummer/group.hpp"

namespace kummer {

// Homology class of an oriented coordinate subtorus: the monomial of its
// free coordinates with the orientation as coefficient.
inline ExteriorClass torus_class(const AffineSubtorus& s) {
    return ExteriorClass::term(s.free, Rational(s.orientation));
}

// Generators of the rational homology of the resolved quotient that the
// intersection machinery tracks.
//
// t-side: for every invariant monomial m of the stratum degree n - 4 a
// pair of torus cycles named t{m} / t'{m}, represented by parallel tori
// pinned at offset 1/3 away from every singular stratum. When singular
// orbits realize m, the pair is keyed to the claiming involution (kinds
// TDelta / TDeltaDual); the dual is then the transverse K3-type cycle
// rather than an honest torus, which rule-based products must respect.
//
// c-side: for every singular orbit, the exceptional sphere classes of its
// resolved neighborhood: sphere x (subtorus of the stratum torus), one
// generator per subset of the free coordinates. Subset sizes 0, 1, n-5
// and n-4 carry the classical names C, CLambda, CTauDual, CDual.
struct RingGenerator {
    enum class Kind { T, TDual, TDelta, TDeltaDual, C, CLambda, CTauDual, CSigma, CDual };

    Kind kind;
    int dim = 0;
    std::string name;
    int orientation = 1;

    // t-side data: support of the representative torus and the key
    // monomial of the t/t' pair (equal for t, complementary for t').
    Monomial support;
    Monomial pair_monomial;
    std::size_t stabilizer = 0;  // claiming element (TDelta/TDeltaDual only)

    // c-side data: owning orbit and base subset of its free coordinates.
    std::size_t orbit = 0;
    Monomial base;
    int j = 0;  // 1-based free-coordinate rank for CLambda / CTauDual

    bool is_t_side() const {
        return kind == Kind::T || kind == Kind::TDual || kind == Kind::TDelta ||
               kind == Kind::TDeltaDual;
    }
    bool is_k3_type() const { return kind == Kind::TDeltaDual; }
};

struct GeneratorCatalogue {
    int n = 0;
    std::size_t group_order = 0;
    std::vector<SingularOrbit> orbits;
    std::vector<Monomial> stratum_basis;  // invariant monomials of degree n - 4
    std::vector<RingGenerator> generators;

    // orbit index -> 1-based rank among orbits of the same stabilizer
    std::vector<int> orbit_rank;
    // stabilizer element -> generator index of the shared TDelta class
    std::map<std::size_t, std::size_t> tdelta_index;

    std::vector<std::size_t> indices_of_dim(int d) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].dim == d) out.push_back(i);
        return out;
    }

    std::size_t count_of_dim(int d) const { return indices_of_dim(d).size(); }
};

namespace detail {

inline std::string element_tag(const GroupZ2k& group, std::size_t e) {
    return group.element_name(e);
}

// Subsets of `mask` with exactly k bits, ascending by submask value.
inline std::vector<Monomial> submasks_of_size(Monomial mask, int k) {
    std::vector<Monomial> out;
    std::uint64_t m = mask.bits;
    for (std::uint64_t s = m;; s = (s - 1) & m) {
        if (std::popcount(s) == k) out.emplace_back(s);
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Builds the generator catalogue for a group whose singular orbits have
// already been computed. Throws InconsistentClaims when the orbit strata
// cannot be matched to the invariant basis: a stratum of the wrong
// dimension, a stratum monomial that is not invariant, or one monomial
// claimed by two different involutions.
inline GeneratorCatalogue generator_catalogue(const GroupZ2k& group,
                                              const std::vector<SingularOrbit>& orbits,
                                              const std::vector<Monomial>& stratum_basis) {
    GeneratorCatalogue cat;
    cat.n = group.dimension();
    cat.group_order = group.order();
    cat.orbits = orbits;
    cat.stratum_basis = stratum_basis;

    const int n = cat.n;
    const int stratum_deg = n - 4;

    // Stratum monomial claims, one involution per monomial.
    std::map<std::uint64_t, std::size_t> claimed_by;
    for (const auto& o : orbits) {
        if (o.homology_class.degree() != stratum_deg)
            throw InconsistentClaims("orbit stratum has dimension " +
                                     std::to_string(o.homology_class.degree()) +
                                     ", expected " + std::to_string(stratum_deg));
        if (std::find(stratum_basis.begin(), stratum_basis.end(), o.homology_class) ==
            stratum_basis.end())
            throw InconsistentClaims("stratum monomial " + o.homology_class.name() +
                                     " is not group-invariant");
        auto [it, inserted] = claimed_by.try_emplace(o.homology_class.bits, o.stabilizer);
        if (!inserted && it->second != o.stabilizer)
            throw InconsistentClaims("monomial " + o.homology_class.name() +
                                     " is claimed by two different involutions");
    }

    cat.orbit_rank.assign(orbits.size(), 0);
    std::map<std::size_t, int> seen_of_stab;
    for (std::size_t i = 0; i < orbits.size(); ++i)
        cat.orbit_rank[i] = ++seen_of_stab[orbits[i].stabilizer];

    std::vector<RingGenerator> gens;

    // Exceptional sphere classes per orbit and base subset.
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        const auto& orbit = orbits[oi];
        Monomial free = orbit.homology_class;
        auto free_coords = free.coords0();
        std::string tag = "[" + detail::element_tag(group, orbit.stabilizer) + "," +
                          std::to_string(cat.orbit_rank[oi]);
        for (int size = 0; size <= stratum_deg; ++size) {
            // Order subsets so that pairing partners S and free\S line up:
            // blocks above the middle size sort by complement.
            auto subsets = detail::submasks_of_size(free, size);
            if (2 * size > stratum_deg)
                std::sort(subsets.begin(), subsets.end(), [&](Monomial a, Monomial b) {
                    return (free.bits & ~a.bits) < (free.bits & ~b.bits);
                });
            for (Monomial s : subsets) {
                RingGenerator g;
                g.orbit = oi;
                g.base = s;
                g.orientation = 1;
                g.dim = size + 2;
                if (size == 0) {
                    g.kind = RingGenerator::Kind::C;
                    g.name = "c" + tag + "]";
                } else if (size == stratum_deg) {
                    g.kind = RingGenerator::Kind::CDual;
                    g.name = "c'" + tag + "]";
                } else if (size == 1) {
                    g.kind = RingGenerator::Kind::CLambda;
                    int coord = s.coords0()[0];
                    g.j = 1 + static_cast<int>(std::find(free_coords.begin(), free_coords.end(),
                                                         coord) -
                                               free_coords.begin());
                    g.name = "c" + tag + "," + std::to_string(g.j) + "]";
                } else if (size == stratum_deg - 1) {
                    g.kind = RingGenerator::Kind::CTauDual;
                    int coord = Monomial(free.bits & ~s.bits).coords0()[0];
                    g.j = 1 + static_cast<int>(std::find(free_coords.begin(), free_coords.end(),
                                                         coord) -
                                               free_coords.begin());
                    // Oriented so that the j-th loop meets it with index +1.
                    g.orientation = (g.j % 2 == 1) ? 1 : -1;
                    g.name = "c'" + tag + "," + std::to_string(g.j) + "]";
                } else {
                    g.kind = RingGenerator::Kind::CSigma;
                    g.name = "c" + tag + ",(";
                    bool first = true;
                    for (int c : s.coords0()) {
                        if (!first) g.name += ",";
                        g.name += std::to_string(
                            1 + static_cast<int>(std::find(free_coords.begin(),
                                                           free_coords.end(), c) -
                                                 free_coords.begin()));
                        first = false;
                    }
                    g.name += ")]";
                }
                gens.push_back(std::move(g));
            }
        }
    }

    // Torus cycle pairs for the stratum-degree invariant monomials. The
    // degenerate degrees 0 and n are the point and fundamental classes,
    // which are not catalogued.
    if (stratum_deg > 0 && stratum_deg < n) {
        for (Monomial m : stratum_basis) {
            Monomial mc = m.complement(n);
            int dual_orient = merge_sign(m, mc);
            auto claimed = claimed_by.find(m.bits);
            RingGenerator t;
            t.dim = stratum_deg;
            t.support = m;
            t.pair_monomial = m;
            t.orientation = 1;
            RingGenerator td;
            td.dim = n - stratum_deg;
            td.support = mc;
            td.pair_monomial = m;
            td.orientation = dual_orient;
            if (claimed != claimed_by.end()) {
                t.kind = RingGenerator::Kind::TDelta;
                td.kind = RingGenerator::Kind::TDeltaDual;
                t.stabilizer = td.stabilizer = claimed->second;
            } else {
                t.kind = RingGenerator::Kind::T;
                td.kind = RingGenerator::Kind::TDual;
            }
            t.name = "t" + m.name();
            td.name = "t'" + m.name();
            gens.push_back(std::move(t));
            gens.push_back(std::move(td));
        }
    }

    // Final order: by dimension; exceptional classes first (orbit order,
    // partner-aligned subset order), then stratum t-cycles by claiming
    // element, then unclaimed t-cycles by monomial.
    auto block = [](const RingGenerator& g) {
        switch (g.kind) {
            case RingGenerator::Kind::TDelta:
            case RingGenerator::Kind::TDeltaDual:
                return 1;
            case RingGenerator::Kind::T:
            case RingGenerator::Kind::TDual:
                return 2;
            default:
                return 0;
        }
    };
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ga = gens[a];
        const auto& gb = gens[b];
        if (ga.dim != gb.dim) return ga.dim < gb.dim;
        if (block(ga) != block(gb)) return block(ga) < block(gb);
        if (block(ga) == 1 && ga.stabilizer != gb.stabilizer)
            return ga.stabilizer < gb.stabilizer;
        if (block(ga) == 2 && !(ga.pair_monomial == gb.pair_monomial))
            return ga.pair_monomial < gb.pair_monomial;
        return a < b;  // keeps the per-orbit construction order
    });
    cat.generators.reserve(gens.size());
    for (std::size_t i : order) cat.generators.push_back(std::move(gens[i]));

    for (std::size_t i = 0; i < cat.generators.size(); ++i)
        if (cat.generators[i].kind == RingGenerator::Kind::TDelta)
            cat.tdelta_index[cat.generators[i].stabilizer] = i;

    return cat;
}

// Betti numbers after resolving every singular orbit: the orbifold Betti
// numbers plus one copy of H(T^(n-4)) x [sphere] per orbit, which shifts
// binomial coefficients of n - 4 up by two degrees. For n = 7 this is
// +1 in degree 2, +3 in degree 3 and the mirror by duality.
inline std::vector<long long> resolved_betti(const GroupZ2k& group,
                                             const std::vector<SingularOrbit>& orbits) {
    std::vector<long long> betti = orbifold_betti(group);
    const int n = group.dimension();
    const int d = n - 4;
    if (orbits.empty() || d < 0) return betti;
    std::vector<long long> binom(static_cast<std::size_t>(d) + 1, 0);
    binom[0] = 1;
    for (int row = 1; row <= d; ++row)
        for (int col = row; col >= 1; --col) binom[col] += binom[col - 1];
    for (int jdeg = 0; jdeg <= d; ++jdeg) {
        int k = jdeg + 2;
        if (k <= n) betti[k] += binom[jdeg] * static_cast<long long>(orbits.size());
    }
    return betti;
}

}  // namespace kummer
