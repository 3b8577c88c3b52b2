#include "qi/manifold.hpp"

namespace qi {

ClassicalData::ClassicalData(std::string name, int b1, Integer tor_order,
                             std::optional<Integer> cup_triple, std::optional<Rational> linking_mu,
                             std::optional<AlexanderPolynomial> alexander)
    : name_(std::move(name)),
      b1_(b1),
      tor_order_(std::move(tor_order)),
      cup_triple_(std::move(cup_triple)),
      linking_mu_(std::move(linking_mu)),
      alexander_(std::move(alexander)) {
    if (b1_ < 0) throw InvariantError("b1 must be >= 0");
    if (tor_order_ < 1) throw InvariantError("torsion order must be >= 1");
    const bool want_cup = b1_ == 3, want_mu = b1_ == 2, want_alex = b1_ == 1;
    if (cup_triple_.has_value() != want_cup)
        throw InvariantError(want_cup ? "b1 = 3 data needs a cup-triple integer"
                                      : "cup-triple is only defined for b1 = 3");
    if (linking_mu_.has_value() != want_mu)
        throw InvariantError(want_mu ? "b1 = 2 data needs the linking invariant mu"
                                     : "linking mu is only defined for b1 = 2");
    if (alexander_.has_value() != want_alex)
        throw InvariantError(want_alex ? "b1 = 1 data needs an Alexander polynomial"
                                       : "an Alexander polynomial is only defined for b1 = 1");
}

const Integer& ClassicalData::cup_triple() const {
    if (!cup_triple_) throw DomainError("no cup-triple on '" + name_ + "' (b1 != 3)");
    return *cup_triple_;
}

const Rational& ClassicalData::linking_mu() const {
    if (!linking_mu_) throw DomainError("no linking mu on '" + name_ + "' (b1 != 2)");
    return *linking_mu_;
}

const AlexanderPolynomial& ClassicalData::alexander() const {
    if (!alexander_) throw DomainError("no Alexander polynomial on '" + name_ + "' (b1 != 1)");
    return *alexander_;
}

Rational lescop_invariant(const ClassicalData& d) {
    switch (d.b1()) {
        case 3:
            return Rational(d.tor_order() * d.cup_triple() * d.cup_triple());
        case 2:
            return Rational(d.tor_order()) * d.linking_mu();
        default:
            throw UnsupportedError("Lescop invariant from classical data is implemented for b1 in "
                                   "{2,3}; got b1 = " +
                                   std::to_string(d.b1()));
    }
}

ClassicalData connected_sum(const ClassicalData& a, const ClassicalData& b) {
    if (a.b1() > 0 && b.b1() > 0)
        throw UnsupportedError("connected sum of two positive-b1 manifolds is not supported at "
                               "the classical-data level");
    const ClassicalData& pos = a.b1() > 0 ? a : b;
    const Integer tor = a.tor_order() * b.tor_order();
    const std::string name = a.name() + "#" + b.name();
    switch (pos.b1()) {
        case 0:
            return ClassicalData::rational_homology_sphere(name, tor);
        case 1:
            return ClassicalData::betti_one(name, tor, pos.alexander());
        case 2:
            return ClassicalData::betti_two(name, tor, pos.linking_mu());
        case 3:
            return ClassicalData::betti_three(name, tor, pos.cup_triple());
        default:
            return ClassicalData::high_betti(name, pos.b1(), tor);
    }
}

}  // namespace qi
