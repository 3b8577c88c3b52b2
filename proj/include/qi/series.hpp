#ifndef QI_SERIES_HPP
#define QI_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qi/rational.hpp"

namespace qi {

// Truncated power series over the rationals in a named variable.
// The truncation order N is inclusive and travels with the value; binary
// operations truncate to the smaller order and never extrapolate.
class TruncatedSeries {
  public:
    TruncatedSeries(std::string variable, int order)
        : var_(std::move(variable)), coeff_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw DomainError("series order must be >= 0");
    }
    TruncatedSeries(std::string variable, std::vector<Rational> coeffs)
        : var_(std::move(variable)), coeff_(std::move(coeffs)) {
        if (coeff_.empty()) throw DomainError("series needs at least the constant term");
    }

    static TruncatedSeries constant(const std::string& variable, int order, const Rational& c) {
        TruncatedSeries s(variable, order);
        s.coeff_[0] = c;
        return s;
    }
    // The identity series x, truncated at `order`.
    static TruncatedSeries identity(const std::string& variable, int order) {
        TruncatedSeries s(variable, order);
        if (order >= 1) s.coeff_[1] = Rational(1);
        return s;
    }

    const std::string& variable() const { return var_; }
    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& coeff(int k) const {
        if (k < 0 || k > order()) throw DomainError("coefficient index beyond truncation order");
        return coeff_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, const Rational& c) {
        if (k < 0 || k > order()) throw DomainError("coefficient index beyond truncation order");
        coeff_[static_cast<std::size_t>(k)] = c;
    }

    TruncatedSeries truncated(int new_order) const;

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::string str() const;

  private:
    std::string var_;
    std::vector<Rational> coeff_;
};

// Result of comparing two series up to their common truncation order.
struct SeriesAgreement {
    bool agree = false;
    int order = -1;  // the common order actually compared
};

SeriesAgreement agree_to_common_order(const TruncatedSeries& a, const TruncatedSeries& b);

// Equality compares coefficients up to min(order): series that agree on
// every coefficient both of them carry are equal.
inline bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return agree_to_common_order(a, b).agree;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
TruncatedSeries operator-(const TruncatedSeries& a);

// Multiplicative inverse; requires a(0) != 0.
TruncatedSeries inverse(const TruncatedSeries& a);

// exp(f) for f with f(0) = 0, via the derivative recurrence.
TruncatedSeries exp(const TruncatedSeries& f);

// log(f) for f with f(0) = 1, by Newton iteration against exp, so the
// pair is self-validating.
TruncatedSeries log(const TruncatedSeries& f);

TruncatedSeries pow(const TruncatedSeries& f, unsigned e);

// Laurent polynomial symmetric under t -> 1/t, stored as a_0..a_d with
// a_{-k} = a_k. Asymmetric input is rejected, not symmetrized.
class SymmetricLaurent {
  public:
    // Full coefficient list a_{-d}..a_d.
    static SymmetricLaurent from_full(const std::vector<Rational>& full);
    // Half list a_0..a_d (the CLI file format).
    static SymmetricLaurent from_half(std::vector<Rational> half);

    int degree() const { return static_cast<int>(half_.size()) - 1; }
    // a_k for |k| <= degree.
    const Rational& coeff(int k) const {
        const int a = k < 0 ? -k : k;
        if (a > degree()) throw DomainError("Laurent coefficient index out of range");
        return half_[static_cast<std::size_t>(a)];
    }

    Rational value_at_one() const;

    SymmetricLaurent operator*(const SymmetricLaurent& o) const;

    // Substitute t = e^x and expand to the given order in x. Symmetry in
    // t <-> 1/t kills every odd coefficient; the result is even.
    TruncatedSeries at_exp(int order, const std::string& variable = "x") const;

    std::string str() const;

  private:
    explicit SymmetricLaurent(std::vector<Rational> half) : half_(std::move(half)) {}
    std::vector<Rational> half_;  // a_0..a_d
};

// Coefficients b_{2m} of -log((x/2)/sinh(x/2)) = sum 2 b_{2m} x^{2m},
// keyed by m, for 2m <= order. Odd coefficients vanish identically.
std::map<int, Rational> sinh_kernel_coeffs(int order);

// The series (x/2)/sinh(x/2) itself, to the given order.
TruncatedSeries sinh_kernel_series(int order, const std::string& variable = "x");

}  // namespace qi

#endif
