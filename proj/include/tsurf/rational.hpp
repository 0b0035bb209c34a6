#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tsurf {

// Arbitrary-precision rational. Invariant: lowest terms, denominator > 0.
// All arithmetic is exact; floating point appears only in SVG emission.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) : v_(mpq_class(num, den)) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : v_(mpq_class(num, den)) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with an optional leading '-' on p; q must be positive.
    static Rational parse(std::string_view s) {
        if (!looks_valid(s)) throw std::domain_error("rational: cannot parse '" + std::string(s) + "'");
        mpq_class v(std::string(s), 10);
        if (v.get_den() == 0) throw std::domain_error("rational: zero denominator");
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

    std::string str() const { return v_.get_str(); }  // "p/q", or "p" when q = 1

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return from(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    static Rational from(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    static bool looks_valid(std::string_view s) {
        std::size_t i = 0;
        auto digits = [&](std::size_t& j) {
            std::size_t start = j;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            return j > start;
        };
        if (i < s.size() && s[i] == '-') ++i;
        if (!digits(i)) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        if (!digits(i)) return false;
        return i == s.size();
    }

    mpq_class v_;
};

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tsurf
