#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// Sign-flip affine map of the n-torus, x_i |-> s_i * x_i + b_i with each
// s_i in {+1, -1} and translations stored canonically in [0, 1). The
// intended values are involutions, which forces 2 b_i = 0 mod 1 on every
// coordinate with s_i = +1; is_involution reports this and make_group
// enforces it. The constructor does not, because the composite of two
// candidate generators must be representable even when it fails to be an
// involution (that failure is exactly what the group validation reports).
class AffineInvolutionMap {
public:
    AffineInvolutionMap(std::vector<int> signs, std::vector<Rational> translation)
        : signs_(std::move(signs)), translation_(std::move(translation)) {
        if (signs_.size() != translation_.size())
            throw DimensionMismatch("sign and translation vectors differ in length");
        if (signs_.empty())
            throw DimensionMismatch("map on a 0-torus");
        for (std::size_t i = 0; i < signs_.size(); ++i) {
            if (signs_[i] != 1 && signs_[i] != -1)
                throw std::invalid_argument("signs must be +1 or -1");
            translation_[i] = translation_[i].mod1();
        }
    }

    // True iff applying the map twice is the identity: reflected
    // coordinates always are, preserved ones need translation 0 or 1/2.
    bool is_involution() const {
        for (std::size_t i = 0; i < signs_.size(); ++i)
            if (signs_[i] == 1 && !(translation_[i] + translation_[i]).mod1().is_zero())
                return false;
        return true;
    }

    static AffineInvolutionMap identity(int n) {
        return AffineInvolutionMap(std::vector<int>(n, 1),
                                   std::vector<Rational>(n, Rational(0)));
    }

    int dimension() const { return static_cast<int>(signs_.size()); }
    int sign(int i) const { return signs_[i]; }
    const std::vector<int>& signs() const { return signs_; }
    const Rational& translation(int i) const { return translation_[i]; }
    const std::vector<Rational>& translations() const { return translation_; }

    bool is_identity() const {
        for (int i = 0; i < dimension(); ++i)
            if (signs_[i] != 1 || !translation_[i].is_zero()) return false;
        return true;
    }

    // Image of a point, coordinates reduced mod 1.
    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (static_cast<int>(x.size()) != dimension())
            throw DimensionMismatch("point dimension differs from map dimension");
        std::vector<Rational> y(x.size());
        for (int i = 0; i < dimension(); ++i) {
            Rational v = signs_[i] == 1 ? x[i] : -x[i];
            y[i] = (v + translation_[i]).mod1();
        }
        return y;
    }

    // "----+++" style sign pattern.
    std::string sign_string() const {
        std::string s;
        for (int v : signs_) s += (v == 1 ? '+' : '-');
        return s;
    }

    bool operator==(const AffineInvolutionMap& o) const {
        return signs_ == o.signs_ && translation_ == o.translation_;
    }

private:
    std::vector<int> signs_;
    std::vector<Rational> translation_;
};

// g then h is evaluated right map first: compose(g, h)(x) = g(h(x)).
// Signs multiply coordinatewise; the translation is b_g + s_g * b_h mod 1.
inline AffineInvolutionMap compose(const AffineInvolutionMap& g,
                                   const AffineInvolutionMap& h) {
    if (g.dimension() != h.dimension())
        throw DimensionMismatch("composing maps of different dimension");
    std::vector<int> signs(g.dimension());
    std::vector<Rational> trans(g.dimension());
    for (int i = 0; i < g.dimension(); ++i) {
        signs[i] = g.sign(i) * h.sign(i);
        Rational hb = g.sign(i) == 1 ? h.translation(i) : -h.translation(i);
        trans[i] = (g.translation(i) + hb).mod1();
    }
    return AffineInvolutionMap(std::move(signs), std::move(trans));
}

// The group (Z_2)^k generated by k commuting affine involutions acting
// effectively. Elements are indexed by bit vectors over the generators:
// bit j of an element index selects generator j, and the element name is
// the bit string with generator 0 first ("100" for the first generator
// of a rank-3 group).
class GroupZ2k {
public:
    int dimension() const { return generators_.empty() ? 0 : generators_[0].dimension(); }
    int rank() const { return static_cast<int>(generators_.size()); }
    std::size_t order() const { return elements_.size(); }

    const std::vector<AffineInvolutionMap>& generators() const { return generators_; }
    const AffineInvolutionMap& element(std::size_t index) const { return elements_[index]; }
    const std::vector<AffineInvolutionMap>& elements() const { return elements_; }

    std::string element_name(std::size_t index) const {
        std::string s(rank(), '0');
        for (int j = 0; j < rank(); ++j)
            if ((index >> j) & 1u) s[j] = '1';
        return s;
    }

    friend GroupZ2k make_group(std::vector<AffineInvolutionMap> generators);

private:
    std::vector<AffineInvolutionMap> generators_;
    std::vector<AffineInvolutionMap> elements_;
};

// Validates the generator list and enumerates all 2^k elements. Throws
// NonInvolutive, NonCommuting, NotEffective or DimensionMismatch; the
// messages identify offending generators by 1-based position.
inline GroupZ2k make_group(std::vector<AffineInvolutionMap> generators) {
    if (generators.empty())
        throw std::invalid_argument("a group needs at least one generator");
    int n = generators[0].dimension();
    for (std::size_t j = 1; j < generators.size(); ++j)
        if (generators[j].dimension() != n)
            throw DimensionMismatch("generator " + std::to_string(j + 1) +
                                    " lives on a different torus");
    if (generators.size() > 20)
        throw std::invalid_argument("more than 20 generators");

    AffineInvolutionMap id = AffineInvolutionMap::identity(n);
    for (std::size_t j = 0; j < generators.size(); ++j)
        if (!(compose(generators[j], generators[j]) == id))
            throw NonInvolutive("generator " + std::to_string(j + 1) +
                                " does not square to the identity");
    for (std::size_t a = 0; a < generators.size(); ++a)
        for (std::size_t b = a + 1; b < generators.size(); ++b)
            if (!(compose(generators[a], generators[b]) ==
                  compose(generators[b], generators[a])))
                throw NonCommuting("generators " + std::to_string(a + 1) + " and " +
                                   std::to_string(b + 1) + " do not commute");

    GroupZ2k g;
    g.generators_ = std::move(generators);
    std::size_t order = std::size_t(1) << g.generators_.size();
    g.elements_.reserve(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
        AffineInvolutionMap e = id;
        for (std::size_t j = 0; j < g.generators_.size(); ++j)
            if ((idx >> j) & 1u) e = compose(e, g.generators_[j]);
        g.elements_.push_back(std::move(e));
    }
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = a + 1; b < order; ++b)
            if (g.elements_[a] == g.elements_[b])
                throw NotEffective("element indices " + g.element_name(a) + " and " +
                                   g.element_name(b) + " are the same map");
    return g;
}

}  // namespace kummer
