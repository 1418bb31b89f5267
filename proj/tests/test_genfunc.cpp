#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convchain/combinatorics.hpp"
#include "convchain/genfunc.hpp"

#include <cmath>

using namespace convchain;

TEST_CASE("hypergeometric coefficient polynomials") {
    const auto h = hypergeom_coefficient_polys(3);
    CHECK(h[0] == RationalPoly(Rational(1)));
    CHECK(h[1] == RationalPoly::monomial(1, Rational(-1)));
    CHECK(h[2] == RationalPoly(std::vector<Rational>{Rational(0), Rational(-1, 3),
                                                     Rational(1, 3)}));
    CHECK(h[3].degree() == 3);
}

TEST_CASE("coefficient extraction reproduces the generating polynomials") {
    CHECK(pgf_hypergeom(0) == RationalPoly(Rational(1)));
    CHECK(pgf_hypergeom(2) ==
          RationalPoly(std::vector<Rational>{Rational(0), Rational(2, 3), Rational(1, 3)}));
    CHECK(pgf_hypergeom(3) ==
          RationalPoly(std::vector<Rational>{Rational(0), Rational(1, 2), Rational(4, 9),
                                             Rational(1, 18)}));
    const auto pgf = pgf_by_recurrence(20);
    for (int n = 0; n <= 20; ++n) {
        const auto viahyp = pgf_hypergeom(n);
        CHECK(viahyp == pgf_closed_form(n));
        CHECK(viahyp == pgf.at(n));
    }
}

TEST_CASE("Gauss series evaluation") {
    CHECK(gauss_2f1(0.3, 1.7, 2.2, 0.0, 10) == 1.0);
    CHECK(gauss_2f1(1.0, 1.0, 1.0, 0.5, 60) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)gauss_2f1(1, 1, 1, 1.0, 10), std::domain_error);
    CHECK_THROWS_AS((void)gauss_2f1(1, 1, -2.0, 0.5, 10), std::domain_error);
    CHECK_THROWS_AS((void)gauss_2f1(1, 1, 2, 0.5, 0), std::invalid_argument);
}

TEST_CASE("transformed series agree on the admissible grid") {
    const std::vector<Rational> s_grid = {Rational(0), Rational(1, 4), Rational(1, 2),
                                          Rational(3, 4), Rational(1), Rational(2)};
    const std::vector<double> z_grid = {0.1, -0.1, 0.25, -0.25};
    for (const auto& s : s_grid) {
        for (const double z : z_grid) {
            const auto check = euler_transform_check(s, z, 64);
            CAPTURE(s.to_string());
            CAPTURE(z);
            CHECK(check.pass);
            CHECK(check.max_abs_residual < 1e-9);
        }
    }
    // s = 1, z = 0.3: every generating polynomial evaluates to 1, so the
    // series sums to 1/(1-z)
    const auto unit = euler_transform_check(Rational(1), 0.3, 64);
    CHECK(unit.pass);
    const double direct =
        std::pow(0.7, 2.0) * gauss_2f1(2.0, 3.0, 2.0, 0.3, 64);
    CHECK(direct == doctest::Approx(1.0 / 0.7).epsilon(1e-12));
    // outside the convergence region the check refuses to run
    CHECK_THROWS_AS((void)euler_transform_check(Rational(2), 0.5, 32),
                    std::invalid_argument);
}

TEST_CASE("partial sums converge to the closed form") {
    const std::vector<Rational> s_grid = {Rational(0), Rational(1, 4), Rational(1, 2),
                                          Rational(3, 4), Rational(1), Rational(2)};
    const std::vector<double> z_grid = {0.1, -0.1, 0.25, -0.25};
    for (const auto& s : s_grid) {
        for (const double z : z_grid) {
            CAPTURE(s.to_string());
            CAPTURE(z);
            CHECK(lseries_partial_sum_residual(s, z, 40) < 1e-8);
        }
    }
}

TEST_CASE("normalized moment series coefficients") {
    const auto table = MomentTable::from_recurrence(8, 8);
    const auto series = normalized_moment_series(table, 8);
    CHECK(series.coeff(0, 0) == Rational(1));
    CHECK(series.coeff(0, 3) == Rational(0));
    CHECK(series.coeff(1, 1) == Rational(2, 3));
    CHECK(series.coeff(5, 0) == Rational(1));
    CHECK(series.coeff(1, 3) == Rational(2, 5));
}

TEST_CASE("weighted series identity") {
    const auto table = MomentTable::from_recurrence(12, 12);
    for (const int degree : {8, 12}) {
        const auto series = normalized_moment_series(table, degree);
        CHECK(weighted_series_identity_holds(series));
    }
    // corrupt one coefficient and the identity must fail
    auto broken = normalized_moment_series(table, 8);
    broken.set_coeff(2, 2, broken.coeff(2, 2) + Rational(1, 7));
    CHECK_FALSE(weighted_series_identity_holds(broken));
}

TEST_CASE("pde residual vanishes exactly") {
    const auto table = MomentTable::from_recurrence(12, 12);
    for (const int degree : {8, 12}) {
        const auto series = normalized_moment_series(table, degree);
        CHECK(pde_residual_vanishes(series));
    }
    // the zero series satisfies the linear equation
    CHECK(pde_residual_vanishes(BivariateSeries(8)));
    auto broken = normalized_moment_series(table, 8);
    broken.set_coeff(3, 1, broken.coeff(3, 1) - Rational(1, 5));
    CHECK_FALSE(pde_residual_vanishes(broken));
}

TEST_CASE("pde residual on the pure-x slice") {
    // along y = 0 the series restricts to 1/(1-x), which solves the x-only
    // reduction; the residual slice at j = 0 must vanish on its own
    const auto table = MomentTable::from_recurrence(10, 10);
    const auto series = normalized_moment_series(table, 10);
    BivariateSeries xslice(10);
    for (int n = 0; n <= 10; ++n) xslice.set_coeff(n, 0, series.coeff(n, 0));
    // Euler operator of the slice minus source term, cleared of denominators
    const auto euler = xslice.partial_x().partial_x().shifted(2, 0) +
                       xslice.partial_x().shifted(1, 0).scaled(Rational(2));
    const auto residual = BivariateSeries::one_minus_sum_squared(10) * euler -
                          xslice.shifted(1, 0).scaled(Rational(2));
    for (int n = 0; n <= 10; ++n) {
        CHECK(residual.coeff(n, 0) == Rational(0));
    }
}

TEST_CASE("boundary conditions of the series") {
    const auto table = MomentTable::from_recurrence(12, 12);
    const auto series = normalized_moment_series(table, 12);
    CHECK(boundary_conditions_hold(series));
    auto broken = series;
    broken.set_coeff(0, 5, Rational(1, 9));
    CHECK_FALSE(boundary_conditions_hold(broken));
    auto broken_row = series;
    broken_row.set_coeff(6, 0, Rational(2));
    CHECK_FALSE(boundary_conditions_hold(broken_row));
}

TEST_CASE("diagonal probabilities match the factorial form") {
    const auto p = vertex_probability_table(30);
    CHECK(diagonal_probability_identity_holds(30, p));
    CHECK(p.at(5, 5) == Rational(1, 2700));
    CHECK(p.at(2, 2) == Rational(1, 3));
    CHECK(p.at(0, 0) == Rational(1));
}
