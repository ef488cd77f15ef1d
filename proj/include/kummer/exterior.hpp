#pragma once

#include <map>

#include "kummer/monomial.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// Element of the rational exterior algebra of an n-torus: a finite sum of
// square-free monomials with nonzero rational coefficients. The term map
// is kept sparse; inserting a zero coefficient erases the term.
class ExteriorClass {
public:
    ExteriorClass() = default;

    static ExteriorClass term(Monomial m, Rational c) {
        ExteriorClass e;
        e.add(m, c);
        return e;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Monomial m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ExteriorClass operator+(const ExteriorClass& o) const {
        ExteriorClass out = *this;
        for (const auto& [m, c] : o.terms_) out.add(m, c);
        return out;
    }

    ExteriorClass operator*(const Rational& s) const {
        ExteriorClass out;
        for (const auto& [m, c] : terms_) out.add(m, c * s);
        return out;
    }

    // Wedge product; overlapping supports annihilate, disjoint ones pick
    // up the ascending-merge shuffle sign.
    ExteriorClass wedge(const ExteriorClass& o) const {
        ExteriorClass out;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                if (ma.bits & mb.bits) continue;
                Rational c = ca * cb;
                if (merge_sign(ma, mb) < 0) c = -c;
                out.add(Monomial(ma.bits | mb.bits), c);
            }
        }
        return out;
    }

    bool operator==(const ExteriorClass&) const = default;

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace kummer
