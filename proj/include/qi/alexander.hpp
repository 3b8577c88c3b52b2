#ifndef QI_ALEXANDER_HPP
#define QI_ALEXANDER_HPP

#include <map>

#include "qi/partitions.hpp"
#include "qi/series.hpp"

namespace qi {

// Alexander polynomial of a 3-manifold, symmetric in t <-> 1/t and
// normalized so that evaluation at t = 1 gives 1.
class AlexanderPolynomial {
  public:
    explicit AlexanderPolynomial(SymmetricLaurent body) : body_(std::move(body)) {
        if (body_.value_at_one() != Rational(1))
            throw InvariantError("Alexander polynomial must evaluate to 1 at t = 1, got " +
                                 body_.value_at_one().str());
    }

    static AlexanderPolynomial trivial() {
        return AlexanderPolynomial(SymmetricLaurent::from_half({Rational(1)}));
    }

    const SymmetricLaurent& body() const { return body_; }

  private:
    SymmetricLaurent body_;
};

// Rational combination of even wheels: coefficient of w_{2m} keyed by m.
struct WheelVector {
    std::map<int, Rational> coeff;  // keys m >= 1
    int order = 0;                  // x-order the coefficients were produced at

    Rational at(int m) const {
        auto it = coeff.find(m);
        return it == coeff.end() ? Rational(0) : it->second;
    }
};

// Formal exponential of a wheel vector under disjoint union: coefficient of
// the multiset {m_1,...,m_r} is prod alpha_{m_i} / prod (mult_j!), graded by
// total degree sum m_i <= order.
struct WheelExponential {
    int order = 0;
    std::map<Partition, Rational> coeff;  // includes the empty multiset, coefficient 1
};

// Coefficients a'_{2m} of -1/2 log(Delta(e^x)) = sum a'_{2m} x^{2m},
// keyed by m, for 2m <= order. Needs order >= 2.
std::map<int, Rational> alexander_log_coeffs(const AlexanderPolynomial& delta, int order);

// Wheel weights alpha: coefficient of w_{2m} is 2 b_{2m} + a'_{2m}.
WheelVector wheel_weights(const AlexanderPolynomial& delta, int order);

WheelExponential wheel_exponential(const WheelVector& alpha, int order);

// The regularized torsion series x^2 tau(e^x) = ((x/2)/sinh(x/2))^2 Delta(e^x).
TruncatedSeries torsion_series(const AlexanderPolynomial& delta, int order,
                               const std::string& variable = "x");

}  // namespace qi

#endif
