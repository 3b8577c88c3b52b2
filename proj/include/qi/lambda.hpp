#ifndef QI_LAMBDA_HPP
#define QI_LAMBDA_HPP

#include <string>
#include <vector>

#include "qi/manifold.hpp"
#include "qi/multipoly.hpp"

namespace qi {

// Pairing data on the degree-n state space: the matrix G_{k,l} = g_{k+l}
// for k+l <= n and 0 above, with unit anti-diagonal g_n = 1. Entries below
// the anti-diagonal may be symbolic (the undetermined sphere constants).
class GData {
  public:
    GData(int n, std::vector<MultiPoly> g);

    // g_s = 0 when n-s is odd (orientation reversal on the sphere), the
    // named symbol otherwise, g_n = 1.
    static GData sphere_defaults(int n, const std::string& symbol_prefix = "a");

    int n() const { return n_; }
    const MultiPoly& g(int s) const { return g_.at(static_cast<std::size_t>(s)); }
    // G_{k,l}, including indices beyond n (zero there).
    MultiPoly entry(int k, int l) const;

    // The full (n+1)x(n+1) matrix determinant, expanded exactly. Always +-1.
    MultiPoly determinant() const;

  private:
    int n_;
    std::vector<MultiPoly> g_;  // g_0..g_n
};

// Values z_p = Z[M, O(p)], p = 0..n.
struct ZVector {
    std::vector<MultiPoly> z;
    int n() const { return static_cast<int>(z.size()) - 1; }
};

// The state coefficients lambda^0..lambda^n of a cut manifold, together
// with the Betti number the orientation law depends on.
struct LambdaVector {
    std::vector<MultiPoly> lambda;
    int b1 = 0;
    int n() const { return static_cast<int>(lambda.size()) - 1; }

    friend bool operator==(const LambdaVector& a, const LambdaVector& b) {
        return a.lambda == b.lambda && a.b1 == b.b1;
    }
};

// Unwinds lambda^{n-p} = z_p - sum_{k<n-p} lambda^k g_{k+p} from p = n down.
LambdaVector lambda_from_z(const ZVector& z, const GData& g, int b1 = 0);

// Inverse direction: z_p = sum_k lambda^k g_{k+p} (zero beyond the
// anti-diagonal).
ZVector z_from_lambda(const LambdaVector& l, const GData& g);

// Pairing of two cut-manifold states with an observable shift:
// sum_{k,l} lambda^k(M1) lambda^l(M2) G_{k,l+s} = Z[M1 # M2, O(s)].
MultiPoly heegaard_pair(const LambdaVector& l1, const LambdaVector& l2, const GData& g, int s);

// lambda^p(M1 # M2) = sum_{k+l=p} lambda^k(M1) lambda^l(M2).
LambdaVector connected_sum(const LambdaVector& l1, const LambdaVector& l2);

struct ConsumReport {
    int n = 0;
    bool verified = false;
    std::vector<std::string> identities;  // one rendered identity per degree
};

// Symbolic proof of the connected-sum law: with fully symbolic lambda's and
// g's, recovering lambda from the paired Z-values must reproduce the Cauchy
// product in every degree. Polynomial identity, no specialization.
ConsumReport verify_connected_sum(int n);

// lambda^k -> (-1)^{k(b1+1)} lambda^k.
LambdaVector reverse_orientation(const LambdaVector& l);

// Sphere-normalized invariant z_M - |H_1| z_{S^3} (the rank-2 monopole
// normalization; vanishes on the sphere by construction).
MultiPoly casson_normalize(const MultiPoly& z_m, const MultiPoly& z_s3, const H1Order& h1);

}  // namespace qi

#endif
