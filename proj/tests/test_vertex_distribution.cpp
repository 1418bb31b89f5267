#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convchain/combinatorics.hpp"
#include "convchain/vertex_distribution.hpp"

#include <cmath>

using namespace convchain;

namespace {

RationalPoly poly_of(std::vector<Rational> coeffs) {
    return RationalPoly(std::move(coeffs));
}

// Sturm chain root counting, used only to probe the root structure of the
// generating polynomials. Exact rational arithmetic throughout.
RationalPoly poly_remainder(RationalPoly a, const RationalPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rational factor = a.coeff(a.degree()) / b.coeff(b.degree());
        const int shift = a.degree() - b.degree();
        RationalPoly sub = RationalPoly::monomial(shift, factor) * b;
        a -= sub;
    }
    return a;
}

int count_variations(const std::vector<int>& signs) {
    int variations = 0;
    int last = 0;
    for (const int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// distinct real roots in (-inf, 0), by sign variations of the Sturm chain
int distinct_negative_roots(const RationalPoly& p) {
    std::vector<RationalPoly> chain = {p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        RationalPoly rem = poly_remainder(chain[chain.size() - 2], chain.back());
        chain.push_back(-rem);
    }
    std::vector<int> at_minus_inf, at_zero;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        const int lead = q.coeff(q.degree()).sign();
        at_minus_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
        at_zero.push_back(q.evaluate(Rational(0)).sign());
    }
    return count_variations(at_minus_inf) - count_variations(at_zero);
}

}  // namespace

TEST_CASE("recurrence seeds and low-order polynomials") {
    const auto pgf = pgf_by_recurrence(3);
    CHECK(pgf.at(0) == RationalPoly(Rational(1)));
    CHECK(pgf.at(1) == RationalPoly::monomial(1));
    CHECK(pgf.at(2) == poly_of({Rational(0), Rational(2, 3), Rational(1, 3)}));
    CHECK(pgf.at(3) ==
          poly_of({Rational(0), Rational(1, 2), Rational(4, 9), Rational(1, 18)}));
}

TEST_CASE("generating polynomial structure") {
    const auto pgf = pgf_by_recurrence(25);
    for (int n = 0; n <= 25; ++n) {
        const RationalPoly& g = pgf.at(n);
        CHECK(g.degree() == n);
        CHECK(g.evaluate(Rational(1)) == Rational(1));
        if (n >= 1) CHECK(g.coeff(0).is_zero());
        for (int k = 0; k <= n; ++k) CHECK(g.coeff(k).sign() >= 0);
    }
}

TEST_CASE("closed form matches the recurrence") {
    const auto pgf = pgf_by_recurrence(15);
    for (int n = 0; n <= 15; ++n) {
        CHECK(pgf_closed_form(n) == pgf.at(n));
    }
    CHECK(pgf_closed_form(0) == RationalPoly(Rational(1)));
    CHECK(pgf_closed_form(1) == RationalPoly::monomial(1));
    CHECK(pgf_closed_form(2) == poly_of({Rational(0), Rational(2, 3), Rational(1, 3)}));
}

TEST_CASE("scalar evaluation matches the polynomials") {
    const auto pgf = pgf_by_recurrence(20);
    const Rational s(3, 7);
    const auto values = pgf_values(s, 20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(values[n] == pgf.at(n).evaluate(s));
    }
}

TEST_CASE("composition enumeration") {
    CHECK(vertex_probability_composition(3, 2) == Rational(4, 9));
    CHECK(vertex_probability_composition(2, 2) == Rational(1, 3));
    for (int n = 1; n <= 12; ++n) {
        CHECK(vertex_probability_composition(n, 1) ==
              Rational(2, static_cast<long long>(n) + 1));
    }
    CHECK(vertex_probability_composition(5, 0) == Rational(0));
    CHECK(vertex_probability_composition(5, 6) == Rational(0));
    CHECK(vertex_probability_composition(0, 0) == Rational(1));
    CHECK_THROWS_WITH_AS(
        (void)vertex_probability_composition(25, 3),
        "vertex_probability_composition: n = 25 exceeds the enumeration cap 20",
        std::invalid_argument);
    CHECK(vertex_probability_composition(22, 3, 22) ==
          vertex_probability_closed(22, 3));
}

TEST_CASE("closed-form probabilities") {
    CHECK(vertex_probability_closed(3, 2) == Rational(4, 9));
    CHECK(vertex_probability_closed(0, 0) == Rational(1));
    CHECK(vertex_probability_closed(5, 7) == Rational(0));
    CHECK(vertex_probability_closed(4, 0) == Rational(0));
}

TEST_CASE("probability table by recurrence") {
    const auto table = vertex_probability_table(4);
    CHECK(table.at(2, 1) == Rational(2, 3));
    CHECK(table.at(3, 3) == Rational(1, 18));
    CHECK(table.at(4, 1) == Rational(2, 5));
    CHECK(table.at(0, 0) == Rational(1));
    CHECK(table.at(3, 0) == Rational(0));
    CHECK(table.at(5, 1) == Rational(0));  // out of range reads as zero
}

TEST_CASE("all four probability routes agree") {
    const int max_n = 15;
    const auto table = vertex_probability_table(max_n);
    const auto pgf = pgf_by_recurrence(max_n);
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Rational closed = vertex_probability_closed(n, k);
            CHECK(closed == table.at(n, k));
            CHECK(closed == pgf.at(n).coeff(k));
            if (n >= 1) {
                CHECK(closed == vertex_probability_composition(n, k));
            }
        }
    }
}

TEST_CASE("normalization, nonnegativity, and anchored values") {
    for (int n = 1; n <= 50; ++n) {
        Rational sum;
        for (int k = 1; k <= n; ++k) {
            const Rational p = vertex_probability_closed(n, k);
            CHECK(p.sign() >= 0);
            sum += p;
        }
        CHECK(sum == Rational(1));
        CHECK(vertex_probability_closed(n, 1) ==
              Rational(2, static_cast<long long>(n) + 1));
    }
    for (int n = 0; n <= 30; ++n) {
        CHECK(vertex_probability_closed(n, n) ==
              pow(Rational(2), static_cast<unsigned>(n)) /
                  Rational(factorial(n) * factorial(n + 1)));
    }
}

TEST_CASE("vertex count moments") {
    const auto pgf = pgf_by_recurrence(50);
    CHECK(vertex_moment(pgf, 2, 1) == Rational(4, 3));
    CHECK(vertex_moment(pgf, 7, 0) == Rational(1));
    CHECK(vertex_moment(pgf, 1, 5) == Rational(1));
    CHECK(vertex_moment_closed(2, 1) == Rational(4, 3));
    CHECK(vertex_moment_closed(1, 1) == Rational(1));
    CHECK(vertex_moment_closed(1, 2) == Rational(1));
    CHECK_THROWS_AS((void)vertex_moment_closed(3, 3), std::invalid_argument);
    for (int n = 1; n <= 50; ++n) {
        CHECK(vertex_moment(pgf, n, 1) == vertex_moment_closed(n, 1));
        CHECK(vertex_moment(pgf, n, 2) == vertex_moment_closed(n, 2));
    }
}

TEST_CASE("logarithmic growth of the expected vertex count") {
    const int n = 100000;
    double h = 0.0;
    for (int i = 1; i <= n; ++i) h += 1.0 / i;
    const double mean = (2.0 / 3.0) * h + 1.0 / 3.0;
    const double ratio = mean / ((2.0 / 3.0) * std::log(n));
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
}

TEST_CASE("generating polynomials factor over negative reals") {
    // G_n vanishes at 0 (no constant term); the cofactor G_n / t of degree
    // n - 1 should have n - 1 distinct roots, all negative.
    const auto pgf = pgf_by_recurrence(10);
    for (int n = 2; n <= 10; ++n) {
        const RationalPoly& g = pgf.at(n);
        std::vector<Rational> shifted(g.degree());
        for (int i = 1; i <= g.degree(); ++i) shifted[i - 1] = g.coeff(i);
        const RationalPoly cofactor(std::move(shifted));
        CHECK(distinct_negative_roots(cofactor) == n - 1);
    }
}
