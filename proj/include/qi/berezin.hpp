#ifndef QI_BEREZIN_HPP
#define QI_BEREZIN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qi/rational.hpp"

namespace qi {

// Element of the Grassmann algebra on m generators (m <= 63). Basis
// monomials are generator subsets in ascending order, stored as bitmasks;
// multiplication tracks the reordering parity, so e_i e_j = -e_j e_i and
// e_i^2 = 0 hold by construction.
class GrassmannElement {
  public:
    explicit GrassmannElement(int generators) : m_(generators) {
        if (generators < 0 || generators > 63)
            throw DomainError("Grassmann algebra supports 0..63 generators");
    }

    static GrassmannElement constant(int generators, const Rational& c) {
        GrassmannElement f(generators);
        if (!c.is_zero()) f.terms_[0] = c;
        return f;
    }
    static GrassmannElement generator(int generators, int i) {
        GrassmannElement f(generators);
        if (i < 0 || i >= generators) throw DomainError("generator index out of range");
        f.terms_[std::uint64_t(1) << i] = Rational(1);
        return f;
    }

    int generators() const { return m_; }
    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

    Rational coeff(std::uint64_t monomial) const {
        auto it = terms_.find(monomial);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    std::uint64_t top_monomial() const {
        return m_ == 0 ? 0 : ((std::uint64_t(1) << m_) - 1);
    }

    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint64_t monomial, const Rational& c);

    GrassmannElement& operator+=(const GrassmannElement& o);
    GrassmannElement& operator-=(const GrassmannElement& o);
    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
    friend GrassmannElement operator*(const Rational& c, const GrassmannElement& a);

    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

  private:
    int m_;
    std::map<std::uint64_t, Rational> terms_;
};

// exp of an element with zero scalar part (nilpotent, so the sum is finite).
GrassmannElement exp(const GrassmannElement& f);

// Replace each generator e_i by sum_j M[i][j] e_j (a linear change of
// variables into the same algebra).
GrassmannElement linear_substitution(const GrassmannElement& f,
                                     const std::vector<std::vector<Rational>>& coeffs);

// Projection to the coefficient of e_1 ... e_m in ascending order.
Rational berezin_integral(const GrassmannElement& f);

// Antisymmetric rational matrix of even size.
class AntisymMatrix {
  public:
    explicit AntisymMatrix(std::vector<std::vector<Rational>> entries);

    static AntisymMatrix standard_symplectic(int n);  // blocks [[0,1],[-1,0]]

    int size() const { return static_cast<int>(a_.size()); }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    Rational determinant() const;
    // Inverse matrix; throws DomainError when singular.
    std::vector<std::vector<Rational>> inverse() const;

  private:
    std::vector<std::vector<Rational>> a_;
};

enum class PfaffianMethod { Combinatorial, Berezin };

// Pfaffian with the sign convention fixed by the Berezin normalization:
// the 2x2 block [[0, a], [-a, 0]] has Pfaffian -a (so this is (-1)^m times
// the textbook value on a 2m x 2m matrix). Both methods implement that
// convention and are tested against each other; squares to det(A) either way.
Rational pfaffian(const AntisymMatrix& a, PfaffianMethod method = PfaffianMethod::Combinatorial);

// Integral of the Gaussian e^{-1/2 theta eps theta} divided by the
// combinatorial Pfaffian. Identically 1; the quotient cross-checks the
// Grassmann engine against the closed formula.
Rational gaussian_norm_check(const AntisymMatrix& eps);

// Totally symmetric rank-4 tensor on 2n indices plus an invertible
// antisymmetric 2-form: the algebraic shadow of a curvature tensor.
class SyntheticCurvature {
  public:
    SyntheticCurvature(int n, std::vector<Rational> omega_flat, AntisymMatrix eps);

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    const Rational& omega(int i, int j, int k, int l) const;
    const AntisymMatrix& eps() const { return eps_; }

  private:
    int n_;
    std::vector<Rational> omega_;  // flat, index ((i*d + j)*d + k)*d + l
    AntisymMatrix eps_;
};

// Zero-mode integral with one eta flavor and three chi flavors, vertex
// I * (1/6) Omega_{IJKL} chi^I_a chi^J_b chi^K_c eta^L eps^{abc}, all four
// measures normalized by the Pfaffian. Scales as I^{2n}.
Rational vertex_integral_b3(const SyntheticCurvature& c, const Rational& coupling);

// Same integral with two chi flavors and an auxiliary Gaussian flavor that
// splices the four-point vertex 1/2 Lambda eps Lambda out of two three-point
// vertices. Equals vertex_integral_b3 at coupling 1.
Rational vertex_integral_b2(const SyntheticCurvature& c);

// sum_{I,J} Omega_{IJKL} eps^{IJ}: symmetric slots against the antisymmetric
// inverse form. Identically the zero matrix.
std::vector<std::vector<Rational>> tadpole_contract(const SyntheticCurvature& c);

}  // namespace qi

#endif
