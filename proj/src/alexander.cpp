#include "qi/alexander.hpp"

namespace qi {

std::map<int, Rational> alexander_log_coeffs(const AlexanderPolynomial& delta, int order) {
    if (order < 2) throw DomainError("Alexander log expansion needs order >= 2");
    const TruncatedSeries at_exp = delta.body().at_exp(order);
    const TruncatedSeries l = log(at_exp);
    std::map<int, Rational> a;
    for (int m = 1; 2 * m <= order; ++m) a[m] = Rational(-1, 2) * l.coeff(2 * m);
    return a;
}

WheelVector wheel_weights(const AlexanderPolynomial& delta, int order) {
    const auto a = alexander_log_coeffs(delta, order);
    const auto b = sinh_kernel_coeffs(order);
    WheelVector alpha;
    alpha.order = order;
    for (int m = 1; 2 * m <= order; ++m) {
        const Rational c = Rational(2) * b.at(m) + a.at(m);
        if (!c.is_zero()) alpha.coeff[m] = c;
    }
    return alpha;
}

WheelExponential wheel_exponential(const WheelVector& alpha, int order) {
    if (order < 0) throw DomainError("wheel exponential needs order >= 0");
    WheelExponential e;
    e.order = order;
    e.coeff[Partition{}] = Rational(1);
    // Walk the available wheel indices in increasing order, choosing a
    // multiplicity for each; the 1/mult! symmetry factor lands here.
    std::vector<std::pair<int, Rational>> entries(alpha.coeff.begin(), alpha.coeff.end());
    Partition current;
    auto rec = [&](auto&& self, std::size_t idx, int used, const Rational& acc) -> void {
        if (idx == entries.size()) return;
        self(self, idx + 1, used, acc);  // multiplicity 0 for this index
        const auto& [m, c] = entries[idx];
        Rational a = acc;
        int total = used;
        for (int mult = 1; total + m <= order; ++mult) {
            total += m;
            a = a * c / Rational(mult);
            current.insert(current.end(), 1, m);
            if (!a.is_zero()) e.coeff[current] = a;
            self(self, idx + 1, total, a);
        }
        current.resize(current.size() - static_cast<std::size_t>(total - used) / static_cast<std::size_t>(m));
    };
    rec(rec, 0, 0, Rational(1));
    return e;
}

TruncatedSeries torsion_series(const AlexanderPolynomial& delta, int order,
                               const std::string& variable) {
    const TruncatedSeries kernel = sinh_kernel_series(order, variable);
    return kernel * kernel * delta.body().at_exp(order, variable);
}

}  // namespace qi
