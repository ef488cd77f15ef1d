#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kummer {

// Exact rational number, always stored in lowest terms with positive
// denominator. Arithmetic runs through 128-bit intermediates and throws
// std::overflow_error if a reduced result leaves the 64-bit range; no
// operation here ever rounds.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}

    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        normalize(n, d);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        return from_i128(i128(num_) * o.den_ + i128(o.num_) * den_,
                         i128(den_) * o.den_);
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        return from_i128(i128(num_) * o.num_, i128(den_) * o.den_);
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return from_i128(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    std::strong_ordering operator<=>(const Rational& o) const {
        i128 l = i128(num_) * o.den_;
        i128 r = i128(o.num_) * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Representative of this value mod 1 in [0, 1).
    Rational mod1() const {
        long long q = num_ / den_;
        long long r = num_ % den_;
        if (r < 0) r += den_;
        (void)q;
        Rational out;
        out.num_ = r;
        out.den_ = den_;
        // r and den_ share no factor because num_ and den_ did not.
        if (out.num_ == 0) out.den_ = 1;
        return out;
    }

    // "p" for integers, "p/q" otherwise; never a decimal.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Parses "p" or "p/q" with optional sign; whitespace is not accepted.
    static Rational parse(const std::string& text) {
        std::size_t slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(parse_ll(text));
            return Rational(parse_ll(text.substr(0, slash)),
                            parse_ll(text.substr(slash + 1)));
        } catch (const std::domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational '" + text + "'");
        }
    }

private:
    using i128 = __int128;

    static long long parse_ll(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty number");
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing junk");
        return v;
    }

    static Rational from_i128(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize(long long n, long long d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    long long num_;
    long long den_;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace kummer
