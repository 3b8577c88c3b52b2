#include <doctest.h>

#include "qi/lambda.hpp"

using qi::GData;
using qi::H1Order;
using qi::Integer;
using qi::LambdaVector;
using qi::MultiPoly;
using qi::Rational;
using qi::ZVector;

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

// Z-values of the sphere itself: z_p = g_p.
ZVector sphere_z(const GData& g) {
    ZVector z;
    for (int p = 0; p <= g.n(); ++p) z.z.push_back(g.g(p));
    return z;
}

LambdaVector symbolic_lambda(const std::string& prefix, int n, int b1 = 0) {
    LambdaVector l;
    l.b1 = b1;
    for (int k = 0; k <= n; ++k) l.lambda.push_back(var(prefix + std::to_string(k)));
    return l;
}

}  // namespace

TEST_CASE("G-data structure") {
    CHECK_THROWS_AS(GData(1, {MultiPoly(0), MultiPoly(2)}), qi::InvariantError);
    const GData g = GData::sphere_defaults(3);
    CHECK(g.g(3) == MultiPoly(1));
    CHECK(g.g(2).is_zero());            // n - s odd: killed by orientation reversal
    CHECK(g.g(1) == var("a2"));
    CHECK(g.g(0).is_zero());
    CHECK(g.entry(2, 2).is_zero());     // beyond the anti-diagonal
    CHECK(g.entry(1, 2) == MultiPoly(1));
}

TEST_CASE("determinant of the pairing matrix is a unit") {
    for (int n = 0; n <= 6; ++n) {
        std::vector<MultiPoly> gs;
        for (int s = 0; s < n; ++s) gs.push_back(var("g" + std::to_string(s)));
        gs.push_back(MultiPoly(1));
        const MultiPoly det = GData(n, gs).determinant();
        CHECK(det.is_constant());
        const Rational value = det.constant_value();
        CHECK((value == Rational(1) || value == Rational(-1)));
    }
}

TEST_CASE("lambda recursion") {
    SUBCASE("sphere input gives the delta vector, symbolically") {
        for (int n = 1; n <= 4; ++n) {
            const GData g = GData::sphere_defaults(n);
            const LambdaVector l = qi::lambda_from_z(sphere_z(g), g);
            CHECK(l.lambda[0] == MultiPoly(1));
            for (int k = 1; k <= n; ++k) CHECK(l.lambda[static_cast<std::size_t>(k)].is_zero());
        }
    }
    SUBCASE("n = 1 rational homology sphere") {
        const GData g(1, {MultiPoly(0), MultiPoly(1)});
        ZVector z;
        z.z = {var("Z"), var("h")};
        const LambdaVector l = qi::lambda_from_z(z, g);
        CHECK(l.lambda[0] == var("h"));
        CHECK(l.lambda[1] == var("Z"));
    }
    SUBCASE("n = 2 keeps the sphere constant symbolic") {
        const GData g(2, {var("a"), MultiPoly(0), MultiPoly(1)});
        ZVector z;
        z.z = {var("Z"), var("Z1"), MultiPoly::parse("h^2")};
        const LambdaVector l = qi::lambda_from_z(z, g);
        CHECK(l.lambda[0] == MultiPoly::parse("h^2"));
        CHECK(l.lambda[1] == var("Z1"));
        CHECK(l.lambda[2] == MultiPoly::parse("Z - a*h^2"));
    }
    SUBCASE("length mismatch") {
        const GData g = GData::sphere_defaults(2);
        ZVector z;
        z.z = {MultiPoly(1)};
        CHECK_THROWS_AS(qi::lambda_from_z(z, g), qi::DomainError);
    }
}

TEST_CASE("lambda and z are mutually inverse, symbolically up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<MultiPoly> gs;
        for (int s = 0; s < n; ++s) gs.push_back(var("g" + std::to_string(s)));
        gs.push_back(MultiPoly(1));
        const GData g(n, gs);

        ZVector z;
        for (int p = 0; p <= n; ++p) z.z.push_back(var("z" + std::to_string(p)));
        CHECK(qi::z_from_lambda(qi::lambda_from_z(z, g), g).z == z.z);

        const LambdaVector l = symbolic_lambda("w", n);
        CHECK(qi::lambda_from_z(qi::z_from_lambda(l, g), g) == l);
    }
}

TEST_CASE("heegaard pairing") {
    const int n = 3;
    const GData g = GData::sphere_defaults(n);
    const LambdaVector l1 = symbolic_lambda("x", n);
    const LambdaVector l2 = symbolic_lambda("y", n);

    SUBCASE("top shift sees only lambda^0 lambda^0") {
        CHECK(qi::heegaard_pair(l1, l2, g, n) == MultiPoly::parse("x0*y0"));
    }
    SUBCASE("pairing against the sphere reproduces the z-vector") {
        LambdaVector sphere;
        sphere.lambda.push_back(MultiPoly(1));
        for (int k = 1; k <= n; ++k) sphere.lambda.push_back(MultiPoly(0));
        for (int s = 0; s <= n; ++s)
            CHECK(qi::heegaard_pair(l1, sphere, g, s) == qi::z_from_lambda(l1, g).z[static_cast<std::size_t>(s)]);
    }
    SUBCASE("n = 1, s = 0 is the classical two-term formula") {
        const GData g1(1, {var("g0"), MultiPoly(1)});
        const LambdaVector a = symbolic_lambda("x", 1);
        const LambdaVector b = symbolic_lambda("y", 1);
        CHECK(qi::heegaard_pair(a, b, g1, 0) ==
              MultiPoly::parse("x0*y1 + x1*y0 + g0*x0*y0"));
    }
}

TEST_CASE("connected sum of lambda vectors") {
    SUBCASE("sphere is the identity") {
        const LambdaVector l = symbolic_lambda("x", 3);
        LambdaVector sphere;
        sphere.lambda = {MultiPoly(1), MultiPoly(0), MultiPoly(0), MultiPoly(0)};
        CHECK(qi::connected_sum(l, sphere).lambda == l.lambda);
    }
    SUBCASE("n = 2 homology-sphere shape") {
        // lambda^0 = 1 on integral homology spheres
        LambdaVector a, b;
        a.lambda = {MultiPoly(1), var("x1"), var("x2")};
        b.lambda = {MultiPoly(1), var("y1"), var("y2")};
        const LambdaVector s = qi::connected_sum(a, b);
        CHECK(s.lambda[2] == MultiPoly::parse("x2 + x1*y1 + y2"));
        // the pairwise-product shape: lambda^2(#) - lambda^2_1 - lambda^2_2
        // = lambda^1_1 lambda^1_2
        CHECK(s.lambda[2] - a.lambda[2] - b.lambda[2] == MultiPoly::parse("x1*y1"));
    }
    SUBCASE("commutative and associative, symbolically") {
        for (int n = 1; n <= 3; ++n) {
            const LambdaVector a = symbolic_lambda("x", n);
            const LambdaVector b = symbolic_lambda("y", n);
            const LambdaVector c = symbolic_lambda("z", n);
            CHECK(qi::connected_sum(a, b).lambda == qi::connected_sum(b, a).lambda);
            CHECK(qi::connected_sum(qi::connected_sum(a, b), c).lambda ==
                  qi::connected_sum(a, qi::connected_sum(b, c)).lambda);
        }
    }
}

TEST_CASE("connected-sum identity verifies symbolically for n = 1..4") {
    for (int n = 1; n <= 4; ++n) {
        const auto report = qi::verify_connected_sum(n);
        CHECK(report.verified);
        CHECK(report.identities.size() == static_cast<std::size_t>(n) + 1);
    }
    CHECK_THROWS_AS(qi::verify_connected_sum(0), qi::DomainError);
    CHECK_THROWS_AS(qi::verify_connected_sum(99), qi::DomainError);
}

TEST_CASE("orientation reversal of lambda vectors") {
    SUBCASE("odd b1 is fixed") {
        LambdaVector l = symbolic_lambda("x", 3, 1);
        CHECK(qi::reverse_orientation(l) == l);
    }
    SUBCASE("involution") {
        for (int b1 = 0; b1 <= 3; ++b1) {
            LambdaVector l = symbolic_lambda("x", 4, b1);
            CHECK(qi::reverse_orientation(qi::reverse_orientation(l)) == l);
        }
    }
    SUBCASE("b1 = 0, n = 1 flips the top entry") {
        LambdaVector l;
        l.b1 = 0;
        l.lambda = {var("h"), var("Z")};
        const LambdaVector r = qi::reverse_orientation(l);
        CHECK(r.lambda[0] == var("h"));
        CHECK(r.lambda[1] == -var("Z"));
    }
}

TEST_CASE("rescaling tower from the observable relation") {
    // With z_p = h^p * Z_{j-p}[M] and the sphere tower g_s = a_{j-s}, the
    // recovered lambda's repeat with the h-power shift: lambda^i at level j
    // equals h^{j-i} times lambda^i at level i.
    const MultiPoly h = var("h");
    const std::vector<MultiPoly> z_base = {MultiPoly(1), var("Z1"), var("Z2"), var("Z3"),
                                           var("Z4")};
    const std::vector<MultiPoly> a = {MultiPoly(1), MultiPoly(0), var("a2"), MultiPoly(0),
                                      var("a4")};
    auto lambda_level = [&](int j) {
        std::vector<MultiPoly> gs, zs;
        for (int s = 0; s <= j; ++s) gs.push_back(a[static_cast<std::size_t>(j - s)]);
        for (int p = 0; p <= j; ++p)
            zs.push_back(h.pow(static_cast<unsigned>(p)) * z_base[static_cast<std::size_t>(j - p)]);
        ZVector z;
        z.z = std::move(zs);
        return qi::lambda_from_z(z, GData(j, std::move(gs)));
    };
    std::vector<LambdaVector> levels;
    for (int j = 0; j <= 4; ++j) levels.push_back(lambda_level(j));
    for (int j = 0; j <= 4; ++j)
        for (int i = 0; i <= j; ++i)
            CHECK(levels[static_cast<std::size_t>(j)].lambda[static_cast<std::size_t>(i)] ==
                  h.pow(static_cast<unsigned>(j - i)) *
                      levels[static_cast<std::size_t>(i)].lambda[static_cast<std::size_t>(i)]);
}

TEST_CASE("sphere-normalized invariant") {
    const H1Order one{Integer(1)};
    const H1Order infinite{Integer(0)};
    CHECK(qi::casson_normalize(var("Zs3"), var("Zs3"), one).is_zero());
    CHECK(qi::casson_normalize(var("Z"), var("Zs3"), one) == MultiPoly::parse("Z - Zs3"));
    CHECK(qi::casson_normalize(var("Z"), var("Zs3"), infinite) == var("Z"));
    const H1Order five{Integer(5)};
    CHECK(qi::casson_normalize(var("Z"), var("Zs3"), five) == MultiPoly::parse("Z - 5*Zs3"));
}
