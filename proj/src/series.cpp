#include "qi/series.hpp"

#include <algorithm>
#include <sstream>

namespace qi {

namespace {

void require_same_variable(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.variable() != b.variable())
        throw DomainError("series variable mismatch: '" + a.variable() + "' vs '" +
                          b.variable() + "'");
}

}  // namespace

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0) throw DomainError("series order must be >= 0");
    TruncatedSeries r(var_, new_order);
    const int top = std::min(new_order, order());
    for (int k = 0; k <= top; ++k) r.coeff_[static_cast<std::size_t>(k)] = coeff_[static_cast<std::size_t>(k)];
    return r;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational a = c.sign() < 0 ? -c : c;
        if (k == 0) {
            out << a.str();
        } else {
            if (a != Rational(1)) out << a.str() << "*";
            out << var_;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    if (first) out << "0";
    out << " + O(" << var_ << "^" << order() + 1 << ")";
    return out.str();
}

SeriesAgreement agree_to_common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_variable(a, b);
    SeriesAgreement res;
    res.order = std::min(a.order(), b.order());
    for (int k = 0; k <= res.order; ++k)
        if (a.coeff(k) != b.coeff(k)) return res;
    res.agree = true;
    return res;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_variable(a, b);
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.variable(), n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_variable(a, b);
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.variable(), n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_variable(a, b);
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.variable(), n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.variable(), a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, c * a.coeff(k));
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Rational(-1) * a; }

TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a.coeff(0).is_zero()) throw DomainError("series inverse needs a nonzero constant term");
    const int n = a.order();
    TruncatedSeries r(a.variable(), n);
    const Rational c0 = Rational(1) / a.coeff(0);
    r.set_coeff(0, c0);
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += a.coeff(j) * r.coeff(k - j);
        r.set_coeff(k, -c0 * acc);
    }
    return r;
}

TruncatedSeries exp(const TruncatedSeries& f) {
    if (!f.coeff(0).is_zero())
        throw DomainError("series exp needs f(0) = 0, got " + f.coeff(0).str());
    const int n = f.order();
    TruncatedSeries g(f.variable(), n);
    g.set_coeff(0, Rational(1));
    // g' = f' g, coefficientwise: k g_k = sum_{j=1..k} j f_j g_{k-j}.
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += Rational(j) * f.coeff(j) * g.coeff(k - j);
        g.set_coeff(k, acc / Rational(k));
    }
    return g;
}

TruncatedSeries log(const TruncatedSeries& f) {
    if (f.coeff(0) != Rational(1))
        throw DomainError("series log needs f(0) = 1, got " + f.coeff(0).str());
    const int n = f.order();
    // Newton iteration for exp(g) = f: g <- g + f*exp(-g) - 1. Quadratic
    // convergence in the valuation, so a handful of full-order steps suffice.
    TruncatedSeries g(f.variable(), n);
    int correct = 1;  // g correct through order `correct` - 1
    const TruncatedSeries one = TruncatedSeries::constant(f.variable(), n, Rational(1));
    while (correct <= n) {
        g = g + f * exp(-g) - one;
        correct *= 2;
    }
    return g;
}

TruncatedSeries pow(const TruncatedSeries& f, unsigned e) {
    TruncatedSeries r = TruncatedSeries::constant(f.variable(), f.order(), Rational(1));
    TruncatedSeries base = f;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

SymmetricLaurent SymmetricLaurent::from_full(const std::vector<Rational>& full) {
    if (full.empty() || full.size() % 2 == 0)
        throw InvariantError("symmetric Laurent data must list a_{-d}..a_d (odd length)");
    const std::size_t d = full.size() / 2;
    for (std::size_t k = 1; k <= d; ++k)
        if (full[d - k] != full[d + k])
            throw InvariantError("asymmetric Laurent coefficients: a_{-" + std::to_string(k) +
                                 "} != a_{" + std::to_string(k) + "}");
    std::vector<Rational> half(full.begin() + static_cast<std::ptrdiff_t>(d), full.end());
    return SymmetricLaurent(std::move(half));
}

SymmetricLaurent SymmetricLaurent::from_half(std::vector<Rational> half) {
    if (half.empty()) throw InvariantError("symmetric Laurent data must list a_0..a_d");
    return SymmetricLaurent(std::move(half));
}

Rational SymmetricLaurent::value_at_one() const {
    Rational v = half_[0];
    for (std::size_t k = 1; k < half_.size(); ++k) v += Rational(2) * half_[k];
    return v;
}

SymmetricLaurent SymmetricLaurent::operator*(const SymmetricLaurent& o) const {
    const int d1 = degree(), d2 = o.degree();
    const int d = d1 + d2;
    std::vector<Rational> half(static_cast<std::size_t>(d) + 1);
    for (int i = -d1; i <= d1; ++i)
        for (int j = -d2; j <= d2; ++j) {
            const int k = i + j;
            if (k < 0) continue;  // symmetric, negative powers mirror
            half[static_cast<std::size_t>(k)] += coeff(i) * o.coeff(j);
        }
    return SymmetricLaurent(std::move(half));
}

TruncatedSeries SymmetricLaurent::at_exp(int order, const std::string& variable) const {
    // a_0 + sum_{k>=1} a_k (e^{kx} + e^{-kx}) = a_0 + sum a_k * 2 cosh(kx).
    TruncatedSeries r = TruncatedSeries::constant(variable, order, half_[0]);
    for (int k = 1; k <= degree(); ++k) {
        if (half_[static_cast<std::size_t>(k)].is_zero()) continue;
        TruncatedSeries cosh_kx(variable, order);
        Rational kpow(1);  // k^{2j} accumulates as we walk the even terms
        const Rational kk(static_cast<long>(k) * k);
        for (int j = 0; 2 * j <= order; ++j) {
            cosh_kx.set_coeff(2 * j, kpow / Rational(factorial(static_cast<unsigned>(2 * j))));
            kpow *= kk;
        }
        r = r + (Rational(2) * half_[static_cast<std::size_t>(k)]) * cosh_kx;
    }
    for (int k = 1; k <= order; k += 2)
        if (!r.coeff(k).is_zero())
            throw InvariantError("odd coefficient survived exp-substitution of a symmetric Laurent");
    return r;
}

std::string SymmetricLaurent::str() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& c, int k) {
        if (c.is_zero()) return;
        if (!first) out << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) out << "-";
        const Rational a = c.sign() < 0 ? -c : c;
        if (k == 0) {
            out << a.str();
        } else {
            if (a != Rational(1)) out << a.str() << "*";
            if (k == 1) out << "(t + t^-1)";
            else out << "(t^" << k << " + t^-" << k << ")";
        }
        first = false;
    };
    for (int k = 0; k <= degree(); ++k) emit(coeff(k), k);
    if (first) out << "0";
    return out.str();
}

TruncatedSeries sinh_kernel_series(int order, const std::string& variable) {
    if (order < 0) throw DomainError("series order must be >= 0");
    // sinh(x/2)/(x/2) = sum_j x^{2j} / (4^j (2j+1)!), then invert.
    TruncatedSeries s(variable, order);
    Integer four_j(1);
    for (int j = 0; 2 * j <= order; ++j) {
        s.set_coeff(2 * j, Rational(Integer(1), four_j * factorial(static_cast<unsigned>(2 * j + 1))));
        four_j *= 4;
    }
    return inverse(s);
}

std::map<int, Rational> sinh_kernel_coeffs(int order) {
    if (order < 1) throw DomainError("sinh kernel expansion needs order >= 1");
    const TruncatedSeries l = -log(sinh_kernel_series(order));
    std::map<int, Rational> b;
    for (int m = 1; 2 * m <= order; ++m) b[m] = l.coeff(2 * m) / Rational(2);
    return b;
}

}  // namespace qi
