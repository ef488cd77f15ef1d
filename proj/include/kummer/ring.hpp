#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/group.hpp"
#include "kummer/monomial.hpp"
#include "kummer/rational.hpp"
#include "kummer/resolution.hpp"
#include "kummer/subtorus.hpp"

namespace kummer {

// Signed count of intersection points of two transversely oriented
// coordinate subtori whose dimensions sum to the ambient dimension.
// Complementary free sets meet in one point whose sign compares the
// concatenated (A then B) frame with the ambient ascending frame; free
// sets that overlap give 0, either because parallel copies are disjoint
// or because a common free circle lets the tori be pushed apart.
inline int subtorus_intersection_number(const AffineSubtorus& a, const AffineSubtorus& b) {
    if (a.n != b.n) throw DimensionMismatch("subtori of different tori");
    if (a.dimension() + b.dimension() != a.n)
        throw NonComplementary("subtorus dimensions sum to " +
                               std::to_string(a.dimension() + b.dimension()) +
                               ", ambient dimension is " + std::to_string(a.n));
    if (a.free.bits & b.free.bits) return 0;
    return merge_sign(a.free, b.free) * a.orientation * b.orientation;
}

// Element of the rational intersection ring over the catalogued
// generators: either a scalar multiple of the point class (dim == 0) or
// a sparse combination of generators of one homological dimension.
struct RingElement {
    int dim = 0;
    Rational scalar;                        // meaningful only when dim == 0
    std::map<std::size_t, Rational> terms;  // generator index -> coefficient

    static RingElement zero(int d) {
        RingElement e;
        e.dim = d;
        return e;
    }

    static RingElement of_scalar(Rational v) {
        RingElement e;
        e.scalar = v;
        return e;
    }

    static RingElement of_term(int d, std::size_t gen, Rational c) {
        RingElement e;
        e.dim = d;
        if (!c.is_zero()) e.terms[gen] = c;
        return e;
    }

    bool is_zero() const { return scalar.is_zero() && terms.empty(); }

    RingElement scaled(const Rational& s) const {
        RingElement e;
        e.dim = dim;
        e.scalar = scalar * s;
        if (!s.is_zero())
            for (const auto& [g, c] : terms) e.terms[g] = c * s;
        return e;
    }

    bool operator==(const RingElement&) const = default;
};

// Sign rule u . v = (-1)^((n - dim u)(n - dim v)) v . u for the
// intersection pairing on an n-manifold.
inline int anticommute_sign(int n, int da, int db) {
    return (((n - da) * (n - db)) % 2 != 0) ? -1 : 1;
}

namespace detail {

// Offset-1/3 representative of a t-side generator. The offset keeps every
// group image of the torus away from all singular offsets, which live in
// (1/4)Z on the data this models.
inline AffineSubtorus t_representative(int n, const RingGenerator& g) {
    std::map<int, Rational> offsets;
    for (int i = 0; i < n; ++i)
        if (!g.support.contains(i)) offsets[i] = Rational(1, 3);
    return AffineSubtorus(n, g.support, std::move(offsets), g.orientation);
}

}  // namespace detail

// Intersection number of two transverse t-side classes in the quotient:
// the full signed count between the indexed group orbits of the offset-1/3
// representatives, divided by the group order. Returns 0 unless the two
// supports partition the coordinates. Verifies that every ambient
// intersection point stays clear of the singular strata, which is what
// makes the descended count meaningful.
inline Rational quotient_pairing(const GroupZ2k& group, const RingGenerator& a,
                                 const RingGenerator& b,
                                 const std::vector<SingularOrbit>& orbits) {
    const int n = group.dimension();
    std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    if ((a.support.bits & b.support.bits) != 0 ||
        (a.support.bits | b.support.bits) != full)
        return Rational(0);

    AffineSubtorus ra = detail::t_representative(n, a);
    AffineSubtorus rb = detail::t_representative(n, b);
    long long total = 0;
    for (const auto& g : group.elements()) {
        AffineSubtorus ga = apply_map(g, ra);
        for (const auto& h : group.elements()) {
            AffineSubtorus hb = apply_map(h, rb);
            total += subtorus_intersection_number(ga, hb);
            std::vector<Rational> point(n);
            for (const auto& [i, v] : ga.offsets) point[static_cast<std::size_t>(i)] = v;
            for (const auto& [i, v] : hb.offsets) point[static_cast<std::size_t>(i)] = v;
            for (const auto& orbit : orbits)
                for (const auto& member : orbit.members)
                    if (member.contains_point(point)) {
                        std::string at = "(";
                        for (int i = 0; i < n; ++i)
                            at += (i ? ", " : "") + point[static_cast<std::size_t>(i)].str();
                        throw Error("t-cycle representatives meet a singular stratum at " +
                                    at + ")");
                    }
        }
    }
    return Rational(total) / Rational(static_cast<long long>(group.order()));
}

// One ring product. Zeros imported from the structure of the K3-type
// resolution (dual torus classes against exceptional classes) rather than
// computed from representatives are flagged as theorem_sourced.
struct RingProduct {
    RingElement value;
    bool theorem_sourced = false;
};

// Rule-based product of two catalogued generators.
//
//   t x t   : 0 unless the supports are complementary, then the quotient
//             pairing of the offset-1/3 representatives.
//   c x c   : 0 across different orbits (disjoint supports). On one orbit
//             both classes fiber over the stratum torus with sphere factor
//             of self-intersection -2, so the product is -2 times the
//             intersection of the base subtori inside the stratum: a
//             signed point for complementary bases, the shared stratum
//             cycle t_delta when both bases are full, and 0 for every
//             intermediate base class, which carries no invariant cycle.
//   t x c   : 0; honest t-cycles have representatives off the exceptional
//             locus, while for the K3-type duals the vanishing is imported
//             from the resolution theorem and flagged as such.
//
// Throws DimensionTooLow when dim a + dim b < n; such requests are caller
// bugs since the product vanishes for degree reasons.
inline RingProduct product(const GroupZ2k& group, const GeneratorCatalogue& cat,
                           std::size_t ia, std::size_t ib) {
    const RingGenerator& a = cat.generators[ia];
    const RingGenerator& b = cat.generators[ib];
    const int n = cat.n;
    if (a.dim + b.dim < n)
        throw DimensionTooLow("product of dimensions " + std::to_string(a.dim) + " and " +
                              std::to_string(b.dim) + " on a " + std::to_string(n) +
                              "-manifold");
    const int rdim = a.dim + b.dim - n;

    if (a.is_t_side() && b.is_t_side()) {
        Rational v = quotient_pairing(group, a, b, cat.orbits);
        if (rdim == 0) return {RingElement::of_scalar(v), false};
        return {RingElement::zero(rdim), false};
    }

    if (!a.is_t_side() && !b.is_t_side()) {
        if (a.orbit != b.orbit) return {RingElement::zero(rdim), false};
        Monomial free = cat.orbits[a.orbit].homology_class;
        std::uint64_t uni = a.base.bits | b.base.bits;
        std::uint64_t common = a.base.bits & b.base.bits;
        if (uni != free.bits) return {RingElement::zero(rdim), false};
        Rational c = Rational(-2 * a.orientation * b.orientation);
        if (common == 0)
            return {RingElement::of_scalar(c * Rational(merge_sign(a.base, b.base))), false};
        if (a.base == free && b.base == free) {
            auto it = cat.tdelta_index.find(cat.orbits[a.orbit].stabilizer);
            if (it == cat.tdelta_index.end())
                throw InconsistentClaims("orbit stratum class is not catalogued");
            return {RingElement::of_term(rdim, it->second, c), false};
        }
        return {RingElement::zero(rdim), false};
    }

    bool theorem = a.is_k3_type() || b.is_k3_type();
    if (rdim == 0) return {RingElement::of_scalar(Rational(0)), theorem};
    return {RingElement::zero(rdim), theorem};
}

// All products between catalogued generators with dimension sum >= n.
// Products are computed once per unordered pair and mirrored through the
// anticommutativity sign; nontrivial_entries lists each nonzero product
// once, in catalogue order.
class RingTable {
public:
    struct Entry {
        std::size_t a = 0;
        std::size_t b = 0;
        RingProduct product;
    };

    const GeneratorCatalogue& catalogue() const { return catalogue_; }
    const GroupZ2k& group() const { return group_; }

    const RingProduct& at(std::size_t ia, std::size_t ib) const {
        return products_.at({ia, ib});
    }

    bool has(std::size_t ia, std::size_t ib) const {
        return products_.count({ia, ib}) != 0;
    }

    std::vector<Entry> nontrivial_entries() const {
        std::vector<Entry> out;
        for (const auto& [key, prod] : products_) {
            if (key.first > key.second || prod.value.is_zero()) continue;
            out.push_back({key.first, key.second, prod});
        }
        return out;
    }

    std::size_t theorem_sourced_zero_count() const {
        std::size_t count = 0;
        for (const auto& [key, prod] : products_)
            if (key.first <= key.second && prod.theorem_sourced) ++count;
        return count;
    }

    friend RingTable ring_table(const GroupZ2k& group, const GeneratorCatalogue& cat);

private:
    GroupZ2k group_;
    GeneratorCatalogue catalogue_;
    std::map<std::pair<std::size_t, std::size_t>, RingProduct> products_;
};

inline RingTable ring_table(const GroupZ2k& group, const GeneratorCatalogue& cat) {
    RingTable table;
    table.group_ = group;
    table.catalogue_ = cat;
    const int n = cat.n;
    for (std::size_t ia = 0; ia < cat.generators.size(); ++ia) {
        for (std::size_t ib = ia; ib < cat.generators.size(); ++ib) {
            if (cat.generators[ia].dim + cat.generators[ib].dim < n) continue;
            RingProduct p = product(group, cat, ia, ib);
            int sign = anticommute_sign(n, cat.generators[ia].dim, cat.generators[ib].dim);
            RingProduct mirrored{p.value.scaled(Rational(sign)), p.theorem_sourced};
            table.products_[{ib, ia}] = std::move(mirrored);
            table.products_[{ia, ib}] = std::move(p);
        }
    }
    return table;
}

// Intersection pairing between the catalogued dimension-k and
// dimension-(n-k) generators, with its exact determinant. The catalogue
// pairs generators dimension by dimension, so the matrix is square; an
// empty block yields the empty matrix with determinant 1.
struct PairingMatrix {
    int k = 0;
    std::vector<std::size_t> rows;  // generator indices of dimension k
    std::vector<std::size_t> cols;  // generator indices of dimension n-k
    std::vector<std::vector<Rational>> entries;
    Rational determinant;
};

inline PairingMatrix pairing_matrix(const RingTable& table, int k) {
    const GeneratorCatalogue& cat = table.catalogue();
    if (k < 0 || k > cat.n) throw std::invalid_argument("pairing degree out of range");
    PairingMatrix m;
    m.k = k;
    m.rows = cat.indices_of_dim(k);
    m.cols = cat.indices_of_dim(cat.n - k);
    if (m.rows.size() != m.cols.size())
        throw Error("pairing blocks of dimension " + std::to_string(k) + " and " +
                    std::to_string(cat.n - k) + " have different sizes");
    m.entries.assign(m.rows.size(), std::vector<Rational>(m.cols.size(), Rational(0)));
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols.size(); ++c)
            m.entries[r][c] = table.at(m.rows[r], m.cols[c]).value.scalar;

    // Exact determinant by fraction-free-ish Gaussian elimination.
    std::vector<std::vector<Rational>> a = m.entries;
    Rational det(1);
    const std::size_t size = a.size();
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && a[pivot][col].is_zero()) ++pivot;
        if (pivot == size) {
            det = Rational(0);
            break;
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < size; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < size; ++c) a[r][c] -= f * a[col][c];
        }
    }
    m.determinant = det;
    return m;
}

// Triple of 2-cohomology classes, represented through their dual
// dimension-(n-2) homology generators, whose two adjacent cup products
// vanish. These are exactly the slots where a Massey triple product is
// defined; the enumeration stays in the generator basis. Triples are
// canonicalized under the reversal (a, b, c) ~ (c, b, a).
struct MasseyCandidate {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
};

inline std::vector<MasseyCandidate> massey_candidates(const RingTable& table) {
    const GeneratorCatalogue& cat = table.catalogue();
    auto gens = cat.indices_of_dim(cat.n - 2);
    std::vector<MasseyCandidate> out;
    for (std::size_t b : gens)
        for (std::size_t aidx = 0; aidx < gens.size(); ++aidx)
            for (std::size_t cidx = aidx; cidx < gens.size(); ++cidx) {
                std::size_t a = gens[aidx];
                std::size_t c = gens[cidx];
                if (!table.at(a, b).value.is_zero()) continue;
                if (!table.at(b, c).value.is_zero()) continue;
                out.push_back({a, b, c});
            }
    return out;
}

}  // namespace kummer
