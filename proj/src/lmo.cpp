#include "qi/lmo.hpp"

#include <sstream>
#include <tuple>

namespace qi {

DiagramSymbol DiagramSymbol::gamma(int n) {
    if (n < 1) throw DomainError("gamma_n needs n >= 1");
    DiagramSymbol s;
    s.kind = Kind::Gamma;
    s.index = n;
    return s;
}

DiagramSymbol DiagramSymbol::h(int n) {
    if (n < 1) throw DomainError("H_n needs n >= 1");
    DiagramSymbol s;
    s.kind = Kind::H;
    s.index = n;
    return s;
}

DiagramSymbol DiagramSymbol::wheel_monomial(Partition p) {
    if (p.empty()) return empty();
    DiagramSymbol s;
    s.kind = Kind::Wheels;
    s.wheels = make_partition(std::move(p));
    return s;
}

int DiagramSymbol::degree() const {
    switch (kind) {
        case Kind::Empty: return 0;
        case Kind::Gamma:
        case Kind::H: return index;
        case Kind::Wheels: return partition_weight(wheels);
    }
    return 0;
}

std::string DiagramSymbol::str() const {
    switch (kind) {
        case Kind::Empty: return "1";
        case Kind::Gamma: return "γ" + std::to_string(index);
        case Kind::H: return "H" + std::to_string(index);
        case Kind::Wheels: {
            std::ostringstream out;
            out << "w[";
            for (std::size_t i = 0; i < wheels.size(); ++i) {
                if (i) out << ",";
                out << wheels[i];
            }
            out << "]";
            return out.str();
        }
    }
    return "?";
}

bool operator<(const DiagramSymbol& a, const DiagramSymbol& b) {
    return std::make_tuple(a.degree(), static_cast<int>(a.kind), a.index, a.wheels) <
           std::make_tuple(b.degree(), static_cast<int>(b.kind), b.index, b.wheels);
}

void FormalDiagramSeries::set(const DiagramSymbol& s, const Rational& c) {
    if (s.degree() > order_)
        throw DomainError("diagram symbol of degree " + std::to_string(s.degree()) +
                          " exceeds series order " + std::to_string(order_));
    if (c.is_zero())
        terms_.erase(s);
    else
        terms_[s] = c;
}

std::string FormalDiagramSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [sym, c] : terms_) {
        if (!first) out << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) out << "-";
        const Rational a = c.sign() < 0 ? -c : c;
        if (sym.kind == DiagramSymbol::Kind::Empty) {
            out << a.str();
        } else {
            out << a.str() << "·" << sym.str();
        }
        first = false;
    }
    return out.str();
}

FormalDiagramSeries lmo_series(const ClassicalData& d, int order) {
    FormalDiagramSeries s(order);
    switch (d.b1()) {
        case 0:
            throw UnsupportedError(
                "no closed diagram series for b1 = 0; use the lambda-algebra with supplied "
                "values");
        case 1: {
            if (d.tor_order() != 1)
                throw UnsupportedError("the b1 = 1 series requires trivial torsion (H_1 = Z); '" +
                                       d.name() + "' has torsion order " + d.tor_order().get_str());
            s.set(DiagramSymbol::empty(), Rational(1));
            if (order >= 1) {
                const WheelVector alpha = wheel_weights(d.alexander(), 2 * order);
                const WheelExponential e = wheel_exponential(alpha, order);
                for (const auto& [part, c] : e.coeff) {
                    if (part.empty()) continue;
                    s.set(DiagramSymbol::wheel_monomial(part), c);
                }
            }
            return s;
        }
        case 2:
        case 3: {
            const Rational lambda = lescop_invariant(d);
            s.set(DiagramSymbol::empty(), Rational(1));
            Rational power(1);
            for (int n = 1; n <= order; ++n) {
                power *= lambda;
                const DiagramSymbol sym =
                    d.b1() == 3 ? DiagramSymbol::gamma(n) : DiagramSymbol::h(n);
                s.set(sym, power);
            }
            return s;
        }
        default:
            s.set(DiagramSymbol::empty(), Rational(1));
            return s;
    }
}

Rational omega_rescale(const Rational& omega_kk, const H1Order& h1, int n, int k) {
    if (k < 0 || k > n) throw DomainError("rescaling needs 0 <= k <= n");
    if (k == n) return omega_kk;
    return Rational(int_pow(h1.value, static_cast<unsigned>(n - k))) * omega_kk;
}

MultiPoly connected_sum_coefficient(const std::vector<MultiPoly>& v1,
                                    const std::vector<MultiPoly>& v2) {
    if (v1.size() != v2.size() || v1.empty())
        throw DomainError("connected-sum coefficient needs two vectors of equal length n+1");
    const std::size_t n = v1.size() - 1;
    MultiPoly acc;
    for (std::size_t d = 0; d <= n; ++d) acc += v1[d] * v2[n - d];
    return acc;
}

}  // namespace qi
