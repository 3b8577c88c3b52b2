#ifndef QI_RW_HPP
#define QI_RW_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include "qi/lmo.hpp"
#include "qi/manifold.hpp"
#include "qi/multipoly.hpp"
#include "qi/partitions.hpp"

namespace qi {

// A hyper-Kahler space reduced to the data the invariants see: quaternionic
// dimension n (dim_R = 4n), the Euler number e(X), and the pairing table
// <P_{m_1} ... P_{m_r}> indexed by partitions of n. P_m is the degree-2m
// curvature-trace class normalized over the n Cartan roots x_i (half the
// +/- pairs): P_m = sum_i x_i^{2m}.
class WeightData {
  public:
    WeightData(std::string name, int n, Rational euler_char,
               std::map<Partition, Rational> pairing);

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    const Rational& euler_char() const { return euler_char_; }
    const Rational& pairing(const Partition& p) const;
    const std::map<Partition, Rational>& pairing_table() const { return pairing_; }

  private:
    std::string name_;
    int n_;
    Rational euler_char_;
    std::map<Partition, Rational> pairing_;
};

// Shipped presets.
WeightData weight_data_k3();      // n = 1, e = 24, <P_1> = -24
WeightData weight_data_t4();      // n = 1, e = 0,  <P_1> = 0
WeightData weight_data_k3xk3();   // product_space(k3, k3)

// Vertex-count pairs (p, q) that can appear at quaternionic dimension n for
// the given first Betti number: p + q = 2n always; b1 >= 4 admits none,
// b1 in {2, 3} forces (2n, 0), b1 <= 1 allows every split.
std::set<std::pair<int, int>> feasible_vertex_counts(int n, int b1);

enum class TorsionFactor { Reject, Multiply };

// The weight-evaluated invariant from classical data:
//   b1 >= 4: 0
//   b1 =  3: e(X) * (|Tor| mu^2)^n
//   b1 =  2: e(X) * (|Tor| mu(M))^n
//   b1 =  1: (-1)^n <exp(-2 sum_m (2 b_{2m} + a'_{2m}) P_m)>_X
// For b1 = 1, nontrivial torsion is rejected unless TorsionFactor::Multiply
// is passed, which multiplies by |Tor|^n.
Rational rw_invariant(const ClassicalData& d, const WeightData& x,
                      TorsionFactor torsion = TorsionFactor::Reject);

// Weight pairing of a diagram series against a space: selects the degree-n
// part and maps gamma_n -> e(X), H_n -> e(X), and a wheel monomial
// w[{m_i}] -> (-1)^n (-2)^r <P_{m_1} ... P_{m_r}>.
Rational pair_weights(const FormalDiagramSeries& s, const WeightData& x);

// Product space: n adds, Euler numbers multiply, and each pairing splits
// over the two factors with the multiset-split multiplicity.
WeightData product_space(const WeightData& a, const WeightData& b);

// Observable insertion O(n-k) reduces the effective dimension:
// Z_n[M, O(n-k)] = |H_1|^{n-k} Z_k[M].
MultiPoly observable_reduce(int n, int k, const H1Order& h1, const MultiPoly& z_k);

// Orientation-reversal sign (-1)^{(n-k)(1+b1)}.
int orientation_sign(int n, int k, int b1);

// Euler numbers of the two compact families: the t^n coefficient of
// prod_k (1-t^k)^{-24}, and (n+1)^3 sigma_1(n+1).
Integer hilbert_scheme_euler(int n);
Integer kummer_euler(int n);

}  // namespace qi

#endif
