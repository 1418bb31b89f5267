#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convchain/combinatorics.hpp"
#include "convchain/volume_moments.hpp"

#include <cmath>
#include <vector>

using namespace convchain;

TEST_CASE("normalized moment from the probability route") {
    const auto p = vertex_probability_table(56);
    CHECK(normalized_moment_from_probabilities(2, 1, p) == Rational(13, 9));
    CHECK(normalized_moment_from_probabilities(7, 0, p) == Rational(1));
    CHECK(normalized_moment_from_probabilities(0, 4, p) == Rational(0));
    for (int k = 1; k <= 50; ++k) {
        CHECK(normalized_moment_from_probabilities(1, k, p) ==
              Rational(2, static_cast<long long>(k) + 2));
    }
    for (int n = 0; n <= 50; ++n) {
        CHECK(normalized_moment_from_probabilities(n, 1, p) ==
              Rational(n) + Rational(2, 3) - Rational(2, 3) * harmonic(n + 1));
    }
}

TEST_CASE("moment recurrence fills the anchored cells") {
    const auto table = MomentTable::from_recurrence(4, 4);
    CHECK(table.moment(1, 1) == Rational(1, 3));
    CHECK(table.moment(2, 1) == Rational(13, 27));
    CHECK(table.moment(1, 2) == Rational(1, 6));
    CHECK(table.moment(0, 0) == Rational(1));
    CHECK(table.moment(0, 3) == Rational(0));
    CHECK(table.normalized(2, 1) == Rational(13, 9));
    CHECK(table.route(2, 1) == MomentRoute::Recurrence);
}

TEST_CASE("closed-form moments") {
    CHECK(volume_moment_closed(1, 1) == Rational(1, 3));
    CHECK(volume_moment_closed(2, 1) == Rational(13, 27));
    CHECK(volume_moment_closed(2, 2) == Rational(101, 360));
    for (int n = 1; n <= 12; ++n) {
        CHECK(volume_moment_closed(n, 0) == Rational(1));
    }
}

TEST_CASE("three moment routes agree exactly") {
    const int max_n = 12, max_k = 12;
    const auto rec = MomentTable::from_recurrence(max_n, max_k);
    const auto closed = MomentTable::from_closed_form(max_n, max_k);
    const auto p = vertex_probability_table(max_n + max_k);
    const auto fromp = MomentTable::from_probabilities(max_n, max_k, p);
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            CHECK(rec.normalized(n, k) == closed.normalized(n, k));
            CHECK(rec.normalized(n, k) == fromp.normalized(n, k));
        }
    }
    CHECK(closed.route(3, 3) == MomentRoute::ClosedForm);
    CHECK(fromp.route(3, 3) == MomentRoute::FromProbabilities);
}

TEST_CASE("small-n closed forms for every order") {
    CHECK(volume_moment_small_n(1, 2) == Rational(1, 6));
    CHECK(volume_moment_small_n(2, 2) == Rational(101, 360));
    CHECK(volume_moment_small_n(2, 0) == Rational(1));
    for (int n = 1; n <= 2; ++n) {
        for (int k = 0; k <= 16; ++k) {
            CHECK(volume_moment_small_n(n, k) == volume_moment_closed(n, k));
        }
    }
    CHECK_THROWS_AS((void)volume_moment_small_n(3, 1), std::invalid_argument);
}

TEST_CASE("harmonic closed forms for the first two orders") {
    CHECK(volume_moment_harmonic(1, 1) == Rational(1, 3));
    CHECK(volume_moment_harmonic(2, 1) == Rational(13, 27));
    CHECK(volume_moment_harmonic(2, 2) == Rational(101, 360));
    CHECK(volume_moment_harmonic(0, 1) == Rational(0));
    CHECK(volume_moment_harmonic(0, 2) == Rational(0));
    for (int n = 1; n <= 50; ++n) {
        CHECK(volume_moment_harmonic(n, 1) == volume_moment_closed(n, 1));
        CHECK(volume_moment_harmonic(n, 2) == volume_moment_closed(n, 2));
    }
    CHECK_THROWS_AS((void)volume_moment_harmonic(5, 3), std::invalid_argument);
}

TEST_CASE("expected raw area display") {
    for (int n = 0; n <= 50; ++n) {
        CHECK(expected_area_harmonic(n) == volume_moment_harmonic(n, 1) / Rational(2));
    }
}

TEST_CASE("variance of the raw area") {
    CHECK(volume_variance(1) == Rational(1, 72));
    const Rational v2 = (Rational(101, 360) - Rational(169, 729)) / Rational(4);
    CHECK(volume_variance(2) == v2);
    for (int n = 1; n <= 50; ++n) {
        const Rational ev1 = volume_moment_harmonic(n, 1);
        const Rational ev2 = volume_moment_harmonic(n, 2);
        CHECK(volume_variance(n) == (ev2 - ev1 * ev1) / Rational(4));
    }
}

TEST_CASE("missed volume moments") {
    CHECK(missed_volume_moment(1, 1) == Rational(2, 3));
    CHECK(missed_volume_moment(1, 0) == Rational(1));
    CHECK(missed_volume_moment(7, 0) == Rational(1));
    CHECK(missed_volume_moment(1, 2) == Rational(1, 2));
    CHECK(missed_volume_moment_harmonic(1, 2) == Rational(1, 2));
    CHECK(missed_volume_moment_harmonic(2, 2) == Rational(343, 1080));
    for (int n = 1; n <= 50; ++n) {
        CHECK(missed_volume_moment(n, 1) == missed_volume_moment_harmonic(n, 1));
        CHECK(missed_volume_moment(n, 2) == missed_volume_moment_harmonic(n, 2));
    }
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= 6; ++k) {
            CHECK(missed_volume_moment(n, k).sign() >= 0);
        }
    }
}

TEST_CASE("exchangeability identity") {
    // by hand: E[V_1] = 1/3 = 1 - (4/3)/2 and E[V_2] = 13/27 = 1 - (14/9)/3
    CHECK(vertex_moment_closed(2, 1) == Rational(4, 3));
    CHECK(vertex_moment_closed(3, 1) == Rational(14, 9));
    for (int n = 1; n <= 50; ++n) {
        CHECK(efron_identity_holds(n));
    }
}

TEST_CASE("three-level recurrence of the normalized moments") {
    const auto table = MomentTable::from_recurrence(11, 10);
    CHECK(normalized_moment_recurrence_holds(table, 10, 10));
    CHECK(table.normalized(1, 1) == Rational(2, 3));
    CHECK(table.normalized(2, 1) == Rational(13, 9));
    CHECK_THROWS_AS(
        (void)normalized_moment_recurrence_holds(table, 11, 10), std::invalid_argument);
}

TEST_CASE("moment monotonicity and bounds") {
    const auto table = MomentTable::from_recurrence(13, 13);
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= 12; ++k) {
            const Rational m = table.moment(n, k);
            CHECK(m > Rational(0));
            CHECK(m <= Rational(1));
            CHECK(table.moment(n, k + 1) <= m);
            if (k >= 1) CHECK(table.moment(n + 1, k) >= m);
        }
    }
}

TEST_CASE("conjectured decay band at moderate n") {
    // Double-precision probability table; the exact routes are impractical at
    // this n. Validated against the harmonic closed forms for k <= 2, then
    // the same data probes k = 3, 4. Band only, never asserted as an identity.
    const int n = 3000;
    const int kmax = 4;
    std::vector<std::vector<double>> p(n + kmax + 1);
    p[0] = {1.0};
    for (int m = 1; m <= n + kmax; ++m) {
        p[m].assign(m + 1, 0.0);
        const double mm = m;
        for (int k = 1; k <= m; ++k) {
            const double prev1 = k <= m - 1 ? p[m - 1][k] : 0.0;
            const double prev2 = m >= 2 && k <= m - 2 ? p[m - 2][k] : 0.0;
            const double lower = p[m - 1][k - 1];
            p[m][k] = (2.0 / (mm * (mm + 1.0))) *
                      ((mm - 1.0) * mm * prev1 - (mm - 2.0) * (mm - 1.0) / 2.0 * prev2 +
                       lower);
        }
    }
    auto moment = [&](int k) {
        // E[V_n^k] = sum_i [C(n+k-i, k)/C(n+k, k)] p_i^{(n+k)}
        double sum = 0.0;
        for (int i = 0; i <= n; ++i) {
            double ratio = 1.0;
            for (int j = 0; j < k; ++j) {
                ratio *= static_cast<double>(n - i + k - j) / (n + k - j);
            }
            sum += ratio * p[n + k][i];
        }
        return sum;
    };
    const double m1 = moment(1);
    const double m2 = moment(2);
    CHECK(std::abs(m1 - volume_moment_harmonic(n, 1).to_double()) < 1e-9);
    CHECK(std::abs(m2 - volume_moment_harmonic(n, 2).to_double()) < 1e-9);
    for (int k = 1; k <= kmax; ++k) {
        const double ratio = n * (1.0 - moment(k)) / (k * std::log(n));
        CHECK(ratio >= 0.55);
        CHECK(ratio <= 0.85);
    }
}
