#ifndef QI_RATIONAL_HPP
#define QI_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "qi/errors.hpp"

namespace qi {

using Integer = mpz_class;

// Exact rational number. Always canonical: lowest terms, denominator > 0.
// All arithmetic in the project funnels through this type; nothing in the
// library ever touches floating point.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(static_cast<long int>(n)) {}  // NOLINT
    Rational(const Integer& n) : v_(n) {}     // NOLINT
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "n" or "n/d", optional leading '-'.
    static Rational from_string(const std::string& text);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned e) const {
        Rational r(1);
        Rational base = *this;
        while (e > 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    // "p/q", or just "p" for integers.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> Integer {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParseError("bad integer literal '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer literal '" + s + "'");
        return Integer(s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    const Integer num = parse_int(text.substr(0, slash));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational literal with zero denominator: '" + text + "'");
    return Rational(num, den);
}

inline Integer int_pow(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace qi

#endif
