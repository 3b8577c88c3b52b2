#ifndef QI_LMO_HPP
#define QI_LMO_HPP

#include <map>
#include <string>
#include <vector>

#include "qi/manifold.hpp"
#include "qi/multipoly.hpp"
#include "qi/partitions.hpp"

namespace qi {

// Basis symbol of the diagram space: the empty diagram, the degree-n classes
// gamma_n and H_n, or a disjoint union of even wheels w_{2m} recorded as the
// multiset of half-degrees m. The degree of w_{2m} is m, so the degree of a
// wheel monomial is the multiset weight.
struct DiagramSymbol {
    enum class Kind { Empty, Gamma, H, Wheels };

    Kind kind = Kind::Empty;
    int index = 0;     // n for Gamma/H
    Partition wheels;  // half-degrees for Wheels

    static DiagramSymbol empty() { return {}; }
    static DiagramSymbol gamma(int n);
    static DiagramSymbol h(int n);
    static DiagramSymbol wheel_monomial(Partition p);

    int degree() const;
    std::string str() const;  // "1", "γ2", "H1", "w[1,1]"

    friend bool operator==(const DiagramSymbol& a, const DiagramSymbol& b) {
        return a.kind == b.kind && a.index == b.index && a.wheels == b.wheels;
    }
    friend bool operator<(const DiagramSymbol& a, const DiagramSymbol& b);
};

// Graded rational combination of diagram symbols, truncated at `order`.
// Zero coefficients are not stored.
class FormalDiagramSeries {
  public:
    explicit FormalDiagramSeries(int order) : order_(order) {
        if (order < 0) throw DomainError("diagram series order must be >= 0");
    }

    int order() const { return order_; }
    const std::map<DiagramSymbol, Rational>& terms() const { return terms_; }

    Rational coeff(const DiagramSymbol& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void set(const DiagramSymbol& s, const Rational& c);

    // Canonical text rendering: degree order, exact fractions.
    std::string str() const;

    friend bool operator==(const FormalDiagramSeries& a, const FormalDiagramSeries& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

  private:
    int order_;
    std::map<DiagramSymbol, Rational> terms_;
};

// The diagram-valued invariant from classical data, truncated at `order`:
//   b1 > 3: 1
//   b1 = 3: sum lambda^n gamma_n with lambda = |Tor| mu^2
//   b1 = 2: sum lambda^n H_n with lambda = |Tor| mu(M)
//   b1 = 1: the wheels exponential of the Alexander data (needs |Tor| = 1)
// b1 = 0 has no closed form here; use the lambda-algebra instead.
FormalDiagramSeries lmo_series(const ClassicalData& d, int order);

// Degree-k part rescaling across truncation levels:
// Omega_n^{(k)} = |H_1|^{n-k} * Omega_k^{(k)}.
Rational omega_rescale(const Rational& omega_kk, const H1Order& h1, int n, int k);

// Top-degree connected-sum coefficient: the Cauchy coefficient
// sum_{d1+d2=n} v1[d1] v2[d2] of two degree-indexed vectors of length n+1.
MultiPoly connected_sum_coefficient(const std::vector<MultiPoly>& v1,
                                    const std::vector<MultiPoly>& v2);

}  // namespace qi

#endif
