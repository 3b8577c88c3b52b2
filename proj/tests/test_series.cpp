#include <doctest.h>

#include "oracles.hpp"
#include "qi/series.hpp"

using qi::Rational;
using qi::SymmetricLaurent;
using qi::TruncatedSeries;

namespace {

TruncatedSeries make(const std::string& var, std::vector<int> nums, std::vector<int> dens) {
    TruncatedSeries s(var, static_cast<int>(nums.size()) - 1);
    for (std::size_t k = 0; k < nums.size(); ++k)
        s.set_coeff(static_cast<int>(k), Rational(nums[k], dens[k]));
    return s;
}

}  // namespace

TEST_CASE("series arithmetic on the worked examples") {
    const TruncatedSeries one_plus_x = make("x", {1, 1, 0}, {1, 1, 1});
    const TruncatedSeries one_minus_x = make("x", {1, -1, 0}, {1, 1, 1});
    const TruncatedSeries prod = one_plus_x * one_minus_x;
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(0));
    CHECK(prod.coeff(2) == Rational(-1));

    const TruncatedSeries zero("x", 2);
    CHECK((one_plus_x + zero) == one_plus_x);

    const TruncatedSeries f = make("x", {1, 1, 1}, {1, 1, 1});
    const TruncatedSeries sq = f * f;
    CHECK(sq.coeff(0) == Rational(1));
    CHECK(sq.coeff(1) == Rational(2));
    CHECK(sq.coeff(2) == Rational(3));
}

TEST_CASE("mixed orders truncate to the minimum and record it") {
    const TruncatedSeries a = make("x", {1, 2, 3, 4}, {1, 1, 1, 1});
    const TruncatedSeries b = make("x", {1, 2}, {1, 1});
    const auto agreement = qi::agree_to_common_order(a, b);
    CHECK(agreement.agree);
    CHECK(agreement.order == 1);
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
}

TEST_CASE("series with different variables refuse to combine") {
    const TruncatedSeries a("x", 2);
    const TruncatedSeries b("t", 2);
    CHECK_THROWS_AS(a + b, qi::DomainError);
    CHECK_THROWS_AS(a * b, qi::DomainError);
}

TEST_CASE("exp matches the power-sum oracle and the stated examples") {
    const TruncatedSeries zero("x", 3);
    const TruncatedSeries one = TruncatedSeries::constant("x", 3, Rational(1));
    CHECK(qi::exp(zero) == one);

    const TruncatedSeries x = TruncatedSeries::identity("x", 3);
    const TruncatedSeries ex = qi::exp(x);
    CHECK(ex.coeff(0) == Rational(1));
    CHECK(ex.coeff(1) == Rational(1));
    CHECK(ex.coeff(2) == Rational(1, 2));
    CHECK(ex.coeff(3) == Rational(1, 6));
    CHECK(ex == oracle::exp_by_powers(x));

    CHECK_THROWS_AS(qi::exp(one), qi::DomainError);
}

TEST_CASE("log matches the alternating-series oracle and the stated examples") {
    const TruncatedSeries one = TruncatedSeries::constant("x", 3, Rational(1));
    CHECK(qi::log(one).is_zero());

    TruncatedSeries one_plus_x = TruncatedSeries::identity("x", 3);
    one_plus_x.set_coeff(0, Rational(1));
    const TruncatedSeries l = qi::log(one_plus_x);
    CHECK(l.coeff(1) == Rational(1));
    CHECK(l.coeff(2) == Rational(-1, 2));
    CHECK(l.coeff(3) == Rational(1, 3));
    CHECK(l == oracle::log_by_series(one_plus_x));

    const TruncatedSeries two = TruncatedSeries::constant("x", 3, Rational(2));
    CHECK_THROWS_AS(qi::log(two), qi::DomainError);
}

TEST_CASE("log of the sinh kernel") {
    const TruncatedSeries kernel = qi::sinh_kernel_series(4);
    const TruncatedSeries l = qi::log(kernel);
    CHECK(l.coeff(2) == Rational(-1, 24));
    CHECK(l.coeff(4) == Rational(1, 2880));
    CHECK(l == oracle::log_by_series(kernel));
}

TEST_CASE("exp and log invert each other on random rational series") {
    oracle::RationalRng rng(20260810);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = rng.next_int(1, 8);
        TruncatedSeries f("x", order);
        for (int k = 1; k <= order; ++k) f.set_coeff(k, rng.next());
        CHECK(qi::log(qi::exp(f)) == f);

        TruncatedSeries g = f;
        g.set_coeff(0, Rational(1));
        CHECK(qi::exp(qi::log(g)) == g);
    }
}

TEST_CASE("symmetric Laurent polynomials reject asymmetric input") {
    CHECK_THROWS_AS(
        SymmetricLaurent::from_full({Rational(1), Rational(0), Rational(2)}),
        qi::InvariantError);
    const SymmetricLaurent ok =
        SymmetricLaurent::from_full({Rational(1), Rational(-1), Rational(1)});
    CHECK(ok.coeff(1) == ok.coeff(-1));
    CHECK(ok.value_at_one() == Rational(1));
}

TEST_CASE("exp-substitution of symmetric Laurent polynomials") {
    SUBCASE("constant") {
        const auto delta = SymmetricLaurent::from_half({Rational(1)});
        const TruncatedSeries s = delta.at_exp(4);
        CHECK(s == TruncatedSeries::constant("x", 4, Rational(1)));
    }
    SUBCASE("t - 1 + 1/t") {
        const auto delta = SymmetricLaurent::from_half({Rational(-1), Rational(1)});
        const TruncatedSeries s = delta.at_exp(4);
        CHECK(s.coeff(0) == Rational(1));
        CHECK(s.coeff(2) == Rational(1));
        CHECK(s.coeff(4) == Rational(1, 12));
    }
    SUBCASE("substitute-then-square agrees with square-then-substitute") {
        const auto delta = SymmetricLaurent::from_half({Rational(-1), Rational(1)});
        const TruncatedSeries first = delta.at_exp(2);
        const TruncatedSeries route_a = first * first;
        const TruncatedSeries route_b = (delta * delta).at_exp(2);
        CHECK(route_a == route_b);
        CHECK(route_b.coeff(0) == Rational(1));
        CHECK(route_b.coeff(2) == Rational(2));
    }
}

TEST_CASE("exp-substitution output is even for random symmetric input") {
    oracle::RationalRng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = rng.next_int(0, 4);
        std::vector<Rational> half;
        for (int k = 0; k <= d; ++k) half.push_back(rng.next());
        const auto lau = SymmetricLaurent::from_half(half);
        const TruncatedSeries s = lau.at_exp(7);
        for (int k = 1; k <= 7; k += 2) CHECK(s.coeff(k) == Rational(0));
    }
}

TEST_CASE("sinh kernel coefficients") {
    const auto b = qi::sinh_kernel_coeffs(5);
    REQUIRE(b.count(1) == 1);
    REQUIRE(b.count(2) == 1);
    CHECK(b.at(1) == Rational(1, 48));    // 2 b_2 = 1/24
    CHECK(b.at(2) == Rational(-1, 5760)); // 2 b_4 = -1/2880
    CHECK(b.size() == 2);                 // no odd entries, nothing beyond 2m <= 5
}
