#pragma once

#include <vector>

#include "kummer/group.hpp"
#include "kummer/monomial.hpp"

namespace kummer {

// Character of an affine involution on one exterior monomial. Translations
// act homotopically trivially, so the pullback multiplies the monomial by
// the product of the reflected signs inside its support.
inline int induced_sign(const AffineInvolutionMap& g, Monomial m) {
    int s = 1;
    for (int i : m.coords0()) {
        if (i >= g.dimension())
            throw DimensionMismatch("monomial coordinate beyond torus dimension");
        s *= g.sign(i);
    }
    return s;
}

// Degree-k monomials fixed by every generator (hence by the whole group),
// in ascending bitmask order.
inline std::vector<Monomial> invariant_basis(const GroupZ2k& group, int k) {
    std::vector<Monomial> out;
    for (Monomial m : monomials_of_degree(group.dimension(), k)) {
        bool invariant = true;
        for (const auto& g : group.generators()) {
            if (induced_sign(g, m) != 1) {
                invariant = false;
                break;
            }
        }
        if (invariant) out.push_back(m);
    }
    return out;
}

// Rational Betti numbers of the quotient orbifold: entry k counts the
// invariant degree-k monomials.
inline std::vector<long long> orbifold_betti(const GroupZ2k& group) {
    std::vector<long long> betti(group.dimension() + 1, 0);
    for (int k = 0; k <= group.dimension(); ++k)
        betti[k] = static_cast<long long>(invariant_basis(group, k).size());
    return betti;
}

}  // namespace kummer
