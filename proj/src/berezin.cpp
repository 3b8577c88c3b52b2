#include "qi/berezin.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace qi {

void GrassmannElement::add_term(std::uint64_t monomial, const Rational& c) {
    if (c.is_zero()) return;
    if (m_ < 63 && monomial >= (std::uint64_t(1) << m_))
        throw DomainError("monomial uses generators beyond the algebra");
    auto [it, inserted] = terms_.emplace(monomial, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    if (m_ != o.m_) throw DomainError("Grassmann algebras of different sizes");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
    if (m_ != o.m_) throw DomainError("Grassmann algebras of different sizes");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

namespace {

// Parity of reordering e_A e_B into ascending order: the number of pairs
// (i in A, j in B) with j < i.
int merge_parity(std::uint64_t a, std::uint64_t b) {
    int swaps = 0;
    while (a != 0) {
        const int i = std::countr_zero(a);
        const std::uint64_t below = (std::uint64_t(1) << i) - 1;
        swaps += std::popcount(b & below);
        a &= a - 1;
    }
    return swaps & 1;
}

}  // namespace

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.m_ != b.m_) throw DomainError("Grassmann algebras of different sizes");
    GrassmannElement r(a.m_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if ((ma & mb) != 0) continue;  // repeated generator squares to zero
            const Rational prod = ca * cb;
            r.add_term(ma | mb, merge_parity(ma, mb) ? -prod : prod);
        }
    return r;
}

GrassmannElement operator*(const Rational& c, const GrassmannElement& a) {
    GrassmannElement r(a.m_);
    for (const auto& [mono, coeff] : a.terms_) r.add_term(mono, c * coeff);
    return r;
}

GrassmannElement exp(const GrassmannElement& f) {
    if (!f.coeff(0).is_zero()) throw DomainError("Grassmann exp needs zero scalar part");
    GrassmannElement r = GrassmannElement::constant(f.generators(), Rational(1));
    GrassmannElement power = GrassmannElement::constant(f.generators(), Rational(1));
    Rational fact(1);
    for (int k = 1; k <= f.generators(); ++k) {
        power = power * f;
        if (power.is_zero()) break;
        fact *= Rational(k);
        for (const auto& [mono, c] : power.terms()) r.add_term(mono, c / fact);
    }
    return r;
}

GrassmannElement linear_substitution(const GrassmannElement& f,
                                     const std::vector<std::vector<Rational>>& coeffs) {
    const int m = f.generators();
    if (coeffs.size() != static_cast<std::size_t>(m))
        throw DomainError("substitution matrix must be square of the generator count");
    std::vector<GrassmannElement> image;
    image.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (coeffs[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m))
            throw DomainError("substitution matrix must be square of the generator count");
        GrassmannElement g(m);
        for (int j = 0; j < m; ++j)
            g += coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 GrassmannElement::generator(m, j);
        image.push_back(std::move(g));
    }
    GrassmannElement r(m);
    for (const auto& [mono, c] : f.terms()) {
        GrassmannElement prod = GrassmannElement::constant(m, c);
        for (int i = 0; i < m; ++i)
            if (mono & (std::uint64_t(1) << i)) prod = prod * image[static_cast<std::size_t>(i)];
        r += prod;
    }
    return r;
}

Rational berezin_integral(const GrassmannElement& f) { return f.coeff(f.top_monomial()); }

AntisymMatrix::AntisymMatrix(std::vector<std::vector<Rational>> entries) : a_(std::move(entries)) {
    const std::size_t k = a_.size();
    if (k == 0 || k % 2 != 0)
        throw DomainError("antisymmetric matrix must have even positive size");
    for (std::size_t i = 0; i < k; ++i) {
        if (a_[i].size() != k) throw DomainError("antisymmetric matrix must be square");
        for (std::size_t j = 0; j <= i; ++j)
            if (a_[i][j] != -a_[j][i])
                throw InvariantError("matrix is not antisymmetric at (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
    }
}

AntisymMatrix AntisymMatrix::standard_symplectic(int n) {
    if (n < 1) throw DomainError("symplectic form needs n >= 1");
    std::vector<std::vector<Rational>> e(static_cast<std::size_t>(2 * n),
                                         std::vector<Rational>(static_cast<std::size_t>(2 * n)));
    for (int b = 0; b < n; ++b) {
        e[static_cast<std::size_t>(2 * b)][static_cast<std::size_t>(2 * b + 1)] = Rational(1);
        e[static_cast<std::size_t>(2 * b + 1)][static_cast<std::size_t>(2 * b)] = Rational(-1);
    }
    return AntisymMatrix(std::move(e));
}

Rational AntisymMatrix::determinant() const {
    auto a = a_;
    const int k = size();
    Rational det(1);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (!a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const Rational& p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= p;
        for (int row = col + 1; row < k; ++row) {
            const Rational f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / p;
            if (f.is_zero()) continue;
            for (int j = col; j < k; ++j)
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> AntisymMatrix::inverse() const {
    const int k = size();
    auto a = a_;
    std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(k),
                                           std::vector<Rational>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (!a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw DomainError("matrix is singular");
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        const Rational p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < k; ++j) {
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= p;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= p;
        }
        for (int row = 0; row < k; ++row) {
            if (row == col) continue;
            const Rational f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                inv[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
    }
    return inv;
}

namespace {

// The Gaussian -1/2 theta^i A_ij theta^j as a Grassmann element.
GrassmannElement gaussian_exponent(const AntisymMatrix& a) {
    const int k = a.size();
    GrassmannElement f(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (a.at(i, j).is_zero() || i == j) continue;
            // theta^i theta^j with i < j lands on the monomial {i,j} with
            // parity 0; with i > j the reordering contributes the sign.
            const Rational c = Rational(-1, 2) * a.at(i, j);
            f.add_term((std::uint64_t(1) << i) | (std::uint64_t(1) << j), i < j ? c : -c);
        }
    return f;
}

Rational pfaffian_combinatorial(const AntisymMatrix& a) {
    const int k = a.size();
    const int m = k / 2;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    Rational sum(0);
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        Rational prod(inversions % 2 == 0 ? 1 : -1);
        for (int p = 0; p < m && !prod.is_zero(); ++p)
            prod *= a.at(perm[static_cast<std::size_t>(2 * p)], perm[static_cast<std::size_t>(2 * p + 1)]);
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational norm = Rational(Integer(m % 2 == 0 ? 1 : -1),
                                   int_pow(Integer(2), static_cast<unsigned>(m)) *
                                       factorial(static_cast<unsigned>(m)));
    return norm * sum;
}

}  // namespace

Rational pfaffian(const AntisymMatrix& a, PfaffianMethod method) {
    switch (method) {
        case PfaffianMethod::Combinatorial:
            return pfaffian_combinatorial(a);
        case PfaffianMethod::Berezin:
            return berezin_integral(exp(gaussian_exponent(a)));
    }
    throw DomainError("unknown Pfaffian method");
}

Rational gaussian_norm_check(const AntisymMatrix& eps) {
    const Rational pf = pfaffian(eps, PfaffianMethod::Combinatorial);
    if (pf.is_zero()) throw DomainError("Gaussian normalization needs an invertible form");
    return berezin_integral(exp(gaussian_exponent(eps))) / pf;
}

SyntheticCurvature::SyntheticCurvature(int n, std::vector<Rational> omega_flat, AntisymMatrix eps)
    : n_(n), omega_(std::move(omega_flat)), eps_(std::move(eps)) {
    if (n_ < 1) throw InvariantError("synthetic curvature needs n >= 1");
    const int d = 2 * n_;
    if (omega_.size() != static_cast<std::size_t>(d) * d * d * d)
        throw InvariantError("curvature tensor must have (2n)^4 entries");
    if (eps_.size() != d) throw InvariantError("2-form size must match the curvature indices");
    if (eps_.determinant().is_zero()) throw InvariantError("2-form must be nondegenerate");
    // Total symmetry: the adjacent transpositions generate all of S4.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const Rational& v = omega(i, j, k, l);
                    if (v != omega(j, i, k, l) || v != omega(i, k, j, l) || v != omega(i, j, l, k))
                        throw InvariantError("curvature tensor is not totally symmetric");
                }
}

const Rational& SyntheticCurvature::omega(int i, int j, int k, int l) const {
    const int d = dim();
    return omega_[static_cast<std::size_t>(((i * d + j) * d + k) * d + l)];
}

namespace {

// Generator layout for the zero-mode integrals: four flavors of d = 2n
// generators each; flavor 0 is eta, flavors 1..3 the chi's (or the
// auxiliary Gaussian flavor in the spliced variant). Flavor blocks have
// even size, so the block order does not affect the top-monomial sign.
int gen_id(int flavor, int index, int d) { return flavor * d + index; }

GrassmannElement flavor_gen(int flavor, int index, int d) {
    return GrassmannElement::generator(4 * d, gen_id(flavor, index, d));
}

int levi_civita3(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    // parity of the permutation (a b c) of (0 1 2)
    int inv = 0;
    const int v[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (v[i] > v[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

Rational measure_normalization(const SyntheticCurvature& c) {
    // Four flavor measures, each d^{2n}theta / Pfaff(eps).
    return Rational(1) / pfaffian(c.eps(), PfaffianMethod::Combinatorial).pow(4);
}

}  // namespace

Rational vertex_integral_b3(const SyntheticCurvature& c, const Rational& coupling) {
    const int d = c.dim();
    GrassmannElement vertex(4 * d);
    // (1/6) Omega_{IJKL} chi^I_a chi^J_b chi^K_c eta^L eps^{abc}, flavors a,b,c in 1..3.
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int cc = 0; cc < 3; ++cc) {
                const int sign = levi_civita3(a, b, cc);
                if (sign == 0) continue;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        for (int k = 0; k < d; ++k)
                            for (int l = 0; l < d; ++l) {
                                const Rational& w = c.omega(i, j, k, l);
                                if (w.is_zero()) continue;
                                const Rational coeff = Rational(sign, 6) * w * coupling;
                                vertex += coeff * (flavor_gen(1 + a, i, d) * flavor_gen(1 + b, j, d) *
                                                   flavor_gen(1 + cc, k, d) * flavor_gen(0, l, d));
                            }
            }
    return measure_normalization(c) * berezin_integral(exp(vertex));
}

Rational vertex_integral_b2(const SyntheticCurvature& c) {
    const int d = c.dim();
    const int total = 4 * d;  // eta, chi_1, chi_2, psi
    // Lambda_I = 1/2 Omega_{IJKL} eps^{ab} chi^J_a chi^K_b eta^L, a,b in {1,2}.
    std::vector<GrassmannElement> lambda(static_cast<std::size_t>(d), GrassmannElement(total));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const Rational& w = c.omega(i, j, k, l);
                    if (w.is_zero()) continue;
                    // eps^{12} = -eps^{21} = 1 on the flavor labels
                    lambda[static_cast<std::size_t>(i)] +=
                        Rational(1, 2) * w *
                        (flavor_gen(1, j, d) * flavor_gen(2, k, d) * flavor_gen(0, l, d));
                    lambda[static_cast<std::size_t>(i)] -=
                        Rational(1, 2) * w *
                        (flavor_gen(2, j, d) * flavor_gen(1, k, d) * flavor_gen(0, l, d));
                }
    GrassmannElement exponent(total);
    // -1/2 psi^I eps_IJ psi^J + Lambda_I psi^I
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const Rational& e = c.eps().at(i, j);
            if (!e.is_zero())
                exponent += (Rational(-1, 2) * e) * (flavor_gen(3, i, d) * flavor_gen(3, j, d));
        }
        exponent += lambda[static_cast<std::size_t>(i)] * flavor_gen(3, i, d);
    }
    return measure_normalization(c) * berezin_integral(exp(exponent));
}

std::vector<std::vector<Rational>> tadpole_contract(const SyntheticCurvature& c) {
    const int d = c.dim();
    const auto eps_inv = c.eps().inverse();
    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            Rational acc(0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    acc += c.omega(i, j, k, l) * eps_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            t[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = acc;
        }
    return t;
}

}  // namespace qi
