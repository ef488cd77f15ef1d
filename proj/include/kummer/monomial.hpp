#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace kummer {

// A square-free exterior monomial dx_{i1} ^ ... ^ dx_{ik} over coordinates
// of an n-torus, stored as a support bitmask. Bit j stands for coordinate
// j + 1; all public I/O is 1-based to match the usual index conventions,
// everything internal is 0-based.
struct Monomial {
    std::uint64_t bits = 0;

    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint64_t mask) : bits(mask) {}

    int degree() const { return std::popcount(bits); }
    bool contains(int coord0) const { return (bits >> coord0) & 1u; }
    bool empty() const { return bits == 0; }

    Monomial complement(int n) const {
        std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
        return Monomial(full & ~bits);
    }

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;

    // 0-based support indices, ascending.
    std::vector<int> coords0() const {
        std::vector<int> out;
        for (std::uint64_t m = bits; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    // Builds a monomial from 1-based coordinate indices.
    static Monomial of(const std::vector<int>& coords1) {
        std::uint64_t m = 0;
        for (int c : coords1) m |= 1ull << (c - 1);
        return Monomial(m);
    }

    // "{2,4,6}" with 1-based ascending indices; "{}" for the unit.
    std::string name() const {
        std::string s = "{";
        bool first = true;
        for (int c : coords0()) {
            if (!first) s += ",";
            s += std::to_string(c + 1);
            first = false;
        }
        return s + "}";
    }
};

// Parity sign of merging the ascending frames a and b into one ascending
// frame: (-1)^(number of pairs i in a, j in b with i > j). This is both
// the wedge shuffle sign dx_a ^ dx_b = sign * dx_(a|b) and the orientation
// comparison of a concatenated tangent frame against the ambient one.
// Requires disjoint supports.
inline int merge_sign(Monomial a, Monomial b) {
    int inversions = 0;
    for (std::uint64_t m = a.bits; m; m &= m - 1) {
        int i = std::countr_zero(m);
        std::uint64_t below = (i == 0) ? 0 : ((1ull << i) - 1);
        inversions += std::popcount(b.bits & below);
    }
    return (inversions & 1) ? -1 : 1;
}

// All degree-k monomials on n coordinates in ascending bitmask order.
inline std::vector<Monomial> monomials_of_degree(int n, int k) {
    std::vector<Monomial> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.emplace_back(0);
        return out;
    }
    std::uint64_t v = (1ull << k) - 1;
    std::uint64_t limit = (n == 64) ? ~0ull : (1ull << n);
    while (v < limit) {
        out.emplace_back(v);
        // Gosper's hack: next larger integer with the same popcount.
        std::uint64_t c = v & -v;
        std::uint64_t r = v + c;
        if (r >= limit || r < v) break;
        v = r | (((v ^ r) >> 2) / c);
    }
    return out;
}

}  // namespace kummer
