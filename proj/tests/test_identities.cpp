#include "simplexorder/identities.hpp"

#include "support/quadrature.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace simplexorder;
using Catch::Approx;

TEST_CASE("generalized harmonic numbers") {
    CHECK(harmonic(3, 1) == Rational(11, 6));
    CHECK(harmonic(1, 5) == 1);
    CHECK(harmonic(2, 2) == Rational(5, 4));
    CHECK_THROWS_AS(harmonic(0, 1), std::domain_error);
}

TEST_CASE("f(n,t) base cases and small values") {
    CHECK(f_nt(7, 0) == 1);
    CHECK(f_nt(1, 9) == 1);
    CHECK(f_nt(3, 1) == Rational(11, 6));
    CHECK(f_nt(2, 2) == Rational(7, 4));
    CHECK(f_nt_alternating(2, 2) == Rational(7, 4));
}

TEST_CASE("f(n,t) recursion equals the defining alternating sum exactly") {
    for (int n = 1; n <= 50; ++n)
        for (int t = 0; t <= 6; ++t)
            REQUIRE(f_nt(n, t) == f_nt_alternating(n, t));
}

TEST_CASE("closed forms of f(n,1) and f(n,2)") {
    CHECK(f_closed_forms_check(1));
    CHECK(f_closed_forms_check(10));
    CHECK(f_closed_forms_check(50));
}

TEST_CASE("f(n,t) is positive and nondecreasing in n") {
    for (int t = 1; t <= 4; ++t) {
        for (int n = 1; n <= 30; ++n) {
            CHECK(f_nt(n, t) > 0);
            CHECK(f_nt(n, t) <= f_nt(n + 1, t));
        }
    }
}

TEST_CASE("binomial exchange identity collapses to a Kronecker delta") {
    CHECK(let_identity(3, 2, 2) == 1);
    CHECK(let_identity(3, 2, 0) == 0);
    CHECK(let_identity(5, 4, 1) == 0);
    for (int n = 2; n <= 8; ++n)
        for (int t = 1; t <= 6; ++t)
            for (int i = 0; i <= t; ++i)
                REQUIRE(let_identity(n, t, i) == (i == t ? 1 : 0));
}

TEST_CASE("F(x,y,n,0) collapses to y^(n-1)") {
    CHECK(F_xynr(1.0, 2.0, 4, 0) == Approx(8.0).margin(1e-12));
    for (double x : {0.5, 1.0, 2.0})
        for (double y : {0.5, 1.0, 3.0})
            for (int n : {1, 3, 6})
                CHECK(F_xynr(x, y, n, 0) ==
                      Approx(std::pow(y, n - 1)).epsilon(1e-10).margin(1e-10));
}

TEST_CASE("both routes of F(x,y,n,r) agree") {
    CHECK(F_xynr(1.0, 2.0, 3, 1) ==
          Approx(F_xynr_reduced(1.0, 2.0, 3, 1)).epsilon(1e-10));
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
        for (double y : {0.5, 1.0, 2.0, 3.0}) {
            for (int n = 1; n <= 10; ++n) {
                for (int r = 0; r <= 6; ++r) {
                    const double direct = F_xynr(x, y, n, r);
                    const double reduced = F_xynr_reduced(x, y, n, r);
                    const double scale =
                        std::max({std::abs(direct), std::abs(reduced), 1.0});
                    REQUIRE(std::abs(direct - reduced) <= 1e-9 * scale);
                }
            }
        }
    }
}

TEST_CASE("beta_diff closed form") {
    CHECK(beta_diff(1.0, 1.0, 2.0, 0, 0) == Approx(0.5).margin(1e-14));
    CHECK(beta_diff(1.0, 2.0, 2.0, 3, 4) == 0.0);
    CHECK_THROWS_AS(beta_diff(1.0, 3.0, 2.0, 0, 0), std::domain_error);
}

TEST_CASE("beta_diff matches adaptive quadrature") {
    const struct {
        double u, a, b;
    } ranges[] = {{1.0, 1.0, 3.0}, {1.0, 0.5, 2.0}, {2.0, 1.5, 4.0}};
    for (const auto& rg : ranges) {
        for (int p = 0; p <= 6; ++p) {
            for (int q = 0; q <= 6; ++q) {
                const double closed = beta_diff(rg.u, rg.a, rg.b, p, q);
                const double quad = test_support::adaptive_simpson(
                    [&](double x) {
                        return std::pow(x, p) * std::pow(rg.b * x - rg.u, q);
                    },
                    rg.u / rg.b, rg.u / rg.a, 1e-13);
                const double scale = std::max({std::abs(closed), std::abs(quad), 1.0});
                REQUIRE(std::abs(closed - quad) <= 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("exact binomial and factorial helpers") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(ipow(BigInt(3), 5) == 243);
}
