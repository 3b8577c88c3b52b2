#ifndef QI_MANIFOLD_HPP
#define QI_MANIFOLD_HPP

#include <optional>
#include <string>

#include "qi/alexander.hpp"
#include "qi/rational.hpp"

namespace qi {

// |H_1(M,Z)| with the convention 0 when the group is infinite.
struct H1Order {
    Integer value{0};
    bool is_finite() const { return value != 0; }
};

// Classical invariants of a closed oriented 3-manifold. Exactly the fields
// matching the first Betti number are present:
//   b1 = 3: cup_triple (the triple cup-product integer)
//   b1 = 2: linking_mu (the linking-form invariant mu = integral of g dg)
//   b1 = 1: alexander
//   b1 = 0 or b1 >= 4: no structural field
class ClassicalData {
  public:
    ClassicalData(std::string name, int b1, Integer tor_order,
                  std::optional<Integer> cup_triple, std::optional<Rational> linking_mu,
                  std::optional<AlexanderPolynomial> alexander);

    static ClassicalData rational_homology_sphere(std::string name, Integer tor_order) {
        return ClassicalData(std::move(name), 0, std::move(tor_order), std::nullopt, std::nullopt,
                             std::nullopt);
    }
    static ClassicalData betti_one(std::string name, Integer tor_order,
                                   AlexanderPolynomial alexander) {
        return ClassicalData(std::move(name), 1, std::move(tor_order), std::nullopt, std::nullopt,
                             std::move(alexander));
    }
    static ClassicalData betti_two(std::string name, Integer tor_order, Rational linking_mu) {
        return ClassicalData(std::move(name), 2, std::move(tor_order), std::nullopt,
                             std::move(linking_mu), std::nullopt);
    }
    static ClassicalData betti_three(std::string name, Integer tor_order, Integer cup_triple) {
        return ClassicalData(std::move(name), 3, std::move(tor_order), std::move(cup_triple),
                             std::nullopt, std::nullopt);
    }
    static ClassicalData high_betti(std::string name, int b1, Integer tor_order) {
        return ClassicalData(std::move(name), b1, std::move(tor_order), std::nullopt, std::nullopt,
                             std::nullopt);
    }

    const std::string& name() const { return name_; }
    int b1() const { return b1_; }
    const Integer& tor_order() const { return tor_order_; }
    const Integer& cup_triple() const;
    const Rational& linking_mu() const;
    const AlexanderPolynomial& alexander() const;

    H1Order h1_order() const { return H1Order{b1_ == 0 ? tor_order_ : Integer(0)}; }

  private:
    std::string name_;
    int b1_;
    Integer tor_order_;
    std::optional<Integer> cup_triple_;
    std::optional<Rational> linking_mu_;
    std::optional<AlexanderPolynomial> alexander_;
};

// Lescop invariant from classical data. Defined here for b1 in {2,3}:
//   b1 = 3: |Tor H_1| * mu^2
//   b1 = 2: |Tor H_1| * mu(M)
// The b1 = 2 value uses the positive convention, so that the weight
// evaluation equals e(X) * lambda^n verbatim for both Betti numbers.
Rational lescop_invariant(const ClassicalData& d);

// Connected sum at the classical-data level. At most one summand may have
// positive b1; its structural field carries over and torsion orders multiply.
ClassicalData connected_sum(const ClassicalData& a, const ClassicalData& b);

}  // namespace qi

#endif
