#include "qi/lambda.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qi {

namespace {
constexpr int kConsumBound = 6;
}

GData::GData(int n, std::vector<MultiPoly> g) : n_(n), g_(std::move(g)) {
    if (n_ < 0) throw InvariantError("G-data needs n >= 0");
    if (g_.size() != static_cast<std::size_t>(n_) + 1)
        throw InvariantError("G-data needs entries g_0..g_n");
    if (g_.back() != MultiPoly(Rational(1)))
        throw InvariantError("G-data needs the unit anti-diagonal g_n = 1");
}

GData GData::sphere_defaults(int n, const std::string& symbol_prefix) {
    std::vector<MultiPoly> g;
    for (int s = 0; s <= n; ++s) {
        if (s == n)
            g.push_back(MultiPoly(Rational(1)));
        else if ((n - s) % 2 == 1)
            g.push_back(MultiPoly());
        else
            g.push_back(MultiPoly::variable(symbol_prefix + std::to_string(n - s)));
    }
    return GData(n, std::move(g));
}

MultiPoly GData::entry(int k, int l) const {
    if (k < 0 || l < 0) throw DomainError("G-matrix indices must be >= 0");
    if (k + l > n_) return MultiPoly();
    return g_[static_cast<std::size_t>(k + l)];
}

MultiPoly GData::determinant() const {
    // Permutation expansion; the matrix is small (n <= 6 in practice) and the
    // entries symbolic, so exactness beats cleverness.
    const int size = n_ + 1;
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly det;
    do {
        // permutation sign by counting inversions
        int inversions = 0;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        MultiPoly prod{Rational(inversions % 2 == 0 ? 1 : -1)};
        for (int i = 0; i < size && !prod.is_zero(); ++i)
            prod = prod * entry(i, perm[static_cast<std::size_t>(i)]);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

LambdaVector lambda_from_z(const ZVector& z, const GData& g, int b1) {
    const int n = z.n();
    if (n != g.n())
        throw DomainError("z-vector has n = " + std::to_string(n) + " but G-data has n = " +
                          std::to_string(g.n()));
    LambdaVector l;
    l.b1 = b1;
    l.lambda.resize(static_cast<std::size_t>(n) + 1);
    for (int p = n; p >= 0; --p) {
        MultiPoly acc = z.z[static_cast<std::size_t>(p)];
        for (int k = 0; k < n - p; ++k)
            acc -= l.lambda[static_cast<std::size_t>(k)] * g.g(k + p);
        l.lambda[static_cast<std::size_t>(n - p)] = std::move(acc);
    }
    return l;
}

ZVector z_from_lambda(const LambdaVector& l, const GData& g) {
    const int n = l.n();
    if (n != g.n()) throw DomainError("lambda-vector and G-data sizes differ");
    ZVector z;
    z.z.resize(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        MultiPoly acc;
        for (int k = 0; k + p <= n; ++k) acc += l.lambda[static_cast<std::size_t>(k)] * g.g(k + p);
        z.z[static_cast<std::size_t>(p)] = std::move(acc);
    }
    return z;
}

MultiPoly heegaard_pair(const LambdaVector& l1, const LambdaVector& l2, const GData& g, int s) {
    const int n = g.n();
    if (l1.n() != n || l2.n() != n)
        throw DomainError("heegaard pairing needs lambda-vectors of the G-data size");
    if (s < 0 || s > n) throw DomainError("observable shift must satisfy 0 <= s <= n");
    MultiPoly acc;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
            if (k + l + s > n) continue;
            acc += l1.lambda[static_cast<std::size_t>(k)] * l2.lambda[static_cast<std::size_t>(l)] *
                   g.g(k + l + s);
        }
    return acc;
}

LambdaVector connected_sum(const LambdaVector& l1, const LambdaVector& l2) {
    if (l1.n() != l2.n()) throw DomainError("connected sum needs lambda-vectors of equal size");
    const int n = l1.n();
    LambdaVector r;
    r.b1 = std::max(l1.b1, l2.b1);
    r.lambda.resize(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        MultiPoly acc;
        for (int k = 0; k <= p; ++k)
            acc += l1.lambda[static_cast<std::size_t>(k)] * l2.lambda[static_cast<std::size_t>(p - k)];
        r.lambda[static_cast<std::size_t>(p)] = std::move(acc);
    }
    return r;
}

ConsumReport verify_connected_sum(int n) {
    if (n < 1 || n > kConsumBound)
        throw DomainError("connected-sum verification supports 1 <= n <= " +
                          std::to_string(kConsumBound));
    LambdaVector l1, l2;
    for (int k = 0; k <= n; ++k) {
        l1.lambda.push_back(MultiPoly::variable("x" + std::to_string(k)));
        l2.lambda.push_back(MultiPoly::variable("y" + std::to_string(k)));
    }
    std::vector<MultiPoly> gs;
    for (int s = 0; s < n; ++s) gs.push_back(MultiPoly::variable("g" + std::to_string(s)));
    gs.push_back(MultiPoly(Rational(1)));
    const GData g(n, gs);

    ZVector paired;
    for (int p = 0; p <= n; ++p) paired.z.push_back(heegaard_pair(l1, l2, g, p));
    const LambdaVector recovered = lambda_from_z(paired, g);
    const LambdaVector cauchy = connected_sum(l1, l2);

    ConsumReport report;
    report.n = n;
    report.verified = true;
    for (int p = 0; p <= n; ++p) {
        const MultiPoly& lhs = recovered.lambda[static_cast<std::size_t>(p)];
        const MultiPoly& rhs = cauchy.lambda[static_cast<std::size_t>(p)];
        const bool ok = lhs == rhs;
        report.verified = report.verified && ok;
        std::ostringstream line;
        line << "lambda^" << p << "(M1#M2) = " << rhs.str() << (ok ? "" : "  [MISMATCH: got " + lhs.str() + "]");
        report.identities.push_back(line.str());
    }
    return report;
}

LambdaVector reverse_orientation(const LambdaVector& l) {
    LambdaVector r = l;
    for (int k = 0; k <= l.n(); ++k)
        if ((k * (l.b1 + 1)) % 2 == 1)
            r.lambda[static_cast<std::size_t>(k)] = -r.lambda[static_cast<std::size_t>(k)];
    return r;
}

MultiPoly casson_normalize(const MultiPoly& z_m, const MultiPoly& z_s3, const H1Order& h1) {
    return z_m - MultiPoly(Rational(h1.value)) * z_s3;
}

}  // namespace qi
