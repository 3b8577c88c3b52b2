#ifndef QI_MULTIPOLY_HPP
#define QI_MULTIPOLY_HPP

#include <functional>
#include <map>
#include <string>

#include "qi/rational.hpp"

namespace qi {

// A monomial in named indeterminates, stored canonically (sorted names,
// positive exponents only).
class Monomial {
  public:
    Monomial() = default;

    static Monomial variable(const std::string& name, int exponent = 1);

    bool is_one() const { return exps_.empty(); }
    int total_degree() const;
    int exponent(const std::string& name) const;
    const std::map<std::string, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

    std::string str() const;  // e.g. "a*h^2", "1" for the empty monomial

  private:
    std::map<std::string, int> exps_;
};

// Multivariate polynomial over the rationals. Zero coefficients are never
// stored; the zero polynomial has an empty term map.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[Monomial()] = c;
    }
    MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.terms_[Monomial::variable(name)] = Rational(1);
        return p;
    }

    // Parses sums of terms like "2", "-3/4", "a", "2*a*h^2 - 1".
    static MultiPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_value() const;  // requires is_constant()

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(Rational(-1)) * a; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;

    // Drops every term whose weight exceeds the bound; weight of a monomial
    // is the sum of per-variable weights times exponents.
    MultiPoly truncate_by_weight(const std::function<int(const std::string&)>& weight,
                                 int bound) const;

    std::string str() const;  // canonical: terms in monomial order

    void add_term(const Monomial& m, const Rational& c);

  private:
    std::map<Monomial, Rational> terms_;
};

// exp of a polynomial with zero constant term, truncated by monomial
// weight. Every variable must have weight >= 1 so the sum terminates.
MultiPoly exp_truncated(const MultiPoly& f, const std::function<int(const std::string&)>& weight,
                        int bound);

}  // namespace qi

#endif
