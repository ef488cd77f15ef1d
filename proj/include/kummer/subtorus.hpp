#pragma once

#include <map>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/group.hpp"
#include "kummer/monomial.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// Coordinate-aligned affine subtorus of the n-torus: coordinates in the
// free set range over the whole circle, every other coordinate is pinned
// to an offset in [0, 1). The orientation flag is relative to the frame
// of free coordinates in ascending order (+1 means ascending is positive).
struct AffineSubtorus {
    int n = 0;
    Monomial free;                    // support mask of free coordinates
    std::map<int, Rational> offsets;  // 0-based pinned coordinate -> offset
    int orientation = 1;

    AffineSubtorus() = default;

    AffineSubtorus(int n_, Monomial free_, std::map<int, Rational> offsets_,
                   int orientation_ = 1)
        : n(n_), free(free_), offsets(std::move(offsets_)), orientation(orientation_) {
        for (auto& [i, v] : offsets) {
            if (i < 0 || i >= n || free.contains(i))
                throw DimensionMismatch("offset on a free or out-of-range coordinate");
            v = v.mod1();
        }
        if (static_cast<int>(offsets.size()) + free.degree() != n)
            throw DimensionMismatch("free set and offsets do not partition the coordinates");
    }

    int dimension() const { return free.degree(); }

    bool operator==(const AffineSubtorus& o) const {
        return n == o.n && free == o.free && offsets == o.offsets &&
               orientation == o.orientation;
    }

    // Same underlying point set, ignoring orientation.
    bool same_set(const AffineSubtorus& o) const {
        return n == o.n && free == o.free && offsets == o.offsets;
    }

    // Ordering on (free mask, offset vector); orientation is ignored so
    // that orbit members sort by geometry.
    bool less_set(const AffineSubtorus& o) const {
        if (free != o.free) return free < o.free;
        return offsets < o.offsets;
    }

    bool contains_point(const std::vector<Rational>& x) const {
        for (const auto& [i, v] : offsets)
            if (!(x[static_cast<std::size_t>(i)].mod1() == v)) return false;
        return true;
    }

    // Two coordinate subtori meet iff every coordinate pinned by both is
    // pinned to the same offset.
    bool intersects(const AffineSubtorus& o) const {
        for (const auto& [i, v] : offsets) {
            auto it = o.offsets.find(i);
            if (it != o.offsets.end() && !(it->second == v)) return false;
        }
        return true;
    }
};

// Image of a subtorus under an affine involution. Free coordinates stay
// free, pinned offsets move by the coordinate action, and the orientation
// picks up the product of the signs on the free coordinates.
inline AffineSubtorus apply_map(const AffineInvolutionMap& g, const AffineSubtorus& s) {
    if (g.dimension() != s.n)
        throw DimensionMismatch("map and subtorus dimension differ");
    std::map<int, Rational> offsets;
    for (const auto& [i, v] : s.offsets) {
        Rational w = g.sign(i) == 1 ? v : -v;
        offsets[i] = (w + g.translation(i)).mod1();
    }
    int orient = s.orientation;
    for (int i : s.free.coords0()) orient *= g.sign(i);
    return AffineSubtorus(s.n, s.free, std::move(offsets), orient);
}

}  // namespace kummer
