#include "convchain/genfunc.hpp"

#include "convchain/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace convchain {

std::vector<RationalPoly> hypergeom_coefficient_polys(int max_m) {
    if (max_m < 0) throw std::invalid_argument("hypergeom_coefficient_polys: negative max_m");
    std::vector<RationalPoly> h;
    h.reserve(max_m + 1);
    h.push_back(RationalPoly(Rational(1)));
    RationalPoly raw(Rational(1));  // prod_{i=0..m-1} (i(i+1) - 2t)
    for (int m = 1; m <= max_m; ++m) {
        const long long i = m - 1;
        raw = raw * RationalPoly(std::vector<Rational>{Rational(i * (i + 1)), Rational(-2)});
        h.push_back(Rational(mpz_class(1), factorial(m) * factorial(m + 1)) * raw);
    }
    return h;
}

RationalPoly pgf_hypergeom(int n) {
    if (n < 0) throw std::invalid_argument("pgf_hypergeom: negative n");
    if (n == 0) return RationalPoly(Rational(1));
    const auto h = hypergeom_coefficient_polys(n);
    RationalPoly g;
    for (int m = 1; m <= n; ++m) {
        Rational c = binomial(n - 1, n - m);
        if (m % 2 != 0) c = -c;
        g += c * h[m];
    }
    return g;
}

double gauss_2f1(double a, double b, double c, double z, int terms) {
    if (terms < 1) throw std::invalid_argument("gauss_2f1: terms must be positive");
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error("gauss_2f1: series requires |z| < 1");
    }
    if (c <= 0.0 && std::abs(c - std::round(c)) < 1e-12) {
        throw std::domain_error("gauss_2f1: c must not be a nonpositive integer");
    }
    double sum = 1.0;
    double term = 1.0;
    for (int m = 0; m + 1 < terms; ++m) {
        term *= (a + m) * (b + m) / ((m + 1.0) * (c + m)) * z;
        sum += term;
    }
    return sum;
}

namespace {

double beta_of(const Rational& s) {
    const double one_plus_8s = 1.0 + 8.0 * s.to_double();
    if (one_plus_8s < 0.0) {
        throw std::invalid_argument("euler transform: requires 1 + 8s >= 0");
    }
    return 0.5 + 0.5 * std::sqrt(one_plus_8s);
}

double lseries_partial_sum(const Rational& s, double z, int terms) {
    const auto values = pgf_values(s, terms);
    double sum = 0.0;
    double zpow = 1.0;
    for (int l = 0; l <= terms; ++l) {
        sum += zpow * values[l].to_double();
        zpow *= z;
    }
    return sum;
}

void require_in_domain(const Rational& s, double z) {
    const double sd = s.to_double();
    const double radius = 1.0 / (std::abs(sd) + std::abs(1.0 - sd));
    if (!(std::abs(z) < radius)) {
        throw std::invalid_argument("euler transform: |z| outside the convergence domain");
    }
}

}  // namespace

TransformCheck euler_transform_check(const Rational& s, double z, int terms,
                                     double tolerance) {
    require_in_domain(s, z);
    const double beta = beta_of(s);
    const double direct = std::pow(1.0 - z, beta) * gauss_2f1(beta, beta + 1.0, 2.0, z, terms);
    const double transformed = gauss_2f1(beta, 1.0 - beta, 2.0, z / (z - 1.0), terms);
    const double partial = lseries_partial_sum(s, z, terms);
    TransformCheck result;
    result.max_abs_residual =
        std::max({std::abs(direct - transformed), std::abs(direct - partial),
                  std::abs(transformed - partial)});
    result.pass = result.max_abs_residual < tolerance;
    return result;
}

double lseries_partial_sum_residual(const Rational& s, double z, int terms) {
    require_in_domain(s, z);
    const double beta = beta_of(s);
    const double closed = std::pow(1.0 - z, beta) * gauss_2f1(beta, beta + 1.0, 2.0, z, 256);
    return std::abs(lseries_partial_sum(s, z, terms) - closed);
}

BivariateSeries normalized_moment_series(const MomentTable& table, int truncation_order) {
    if (table.max_n() < truncation_order || table.max_k() < truncation_order) {
        throw std::invalid_argument("normalized_moment_series: table too small");
    }
    BivariateSeries q(truncation_order);
    for (int n = 0; n <= truncation_order; ++n) {
        for (int k = 0; n + k <= truncation_order; ++k) {
            q.set_coeff(n, k, table.normalized(n, k));
        }
    }
    return q;
}

namespace {

// (n+k)(n+k+1)-weighted copy of a coefficient series.
BivariateSeries degree_weighted(const BivariateSeries& q) {
    BivariateSeries w(q.truncation_order());
    for (const auto& [key, v] : q.terms()) {
        const long long d = key.first + key.second;
        w.set_coeff(key.first, key.second, Rational(d * (d + 1)) * v);
    }
    return w;
}

}  // namespace

bool weighted_series_identity_holds(const BivariateSeries& q) {
    const int order = q.truncation_order();
    // right-hand side: 2x Q (1-x-y)^{-2}
    const BivariateSeries rhs =
        (q.shifted(1, 0) * BivariateSeries::geometric_inverse_squared(order))
            .scaled(Rational(2));
    const BivariateSeries residual = degree_weighted(q) - rhs;
    return residual.vanishes_up_to(order - 2);
}

bool pde_residual_vanishes(const BivariateSeries& q) {
    const int order = q.truncation_order();
    const BivariateSeries qx = q.partial_x();
    const BivariateSeries qy = q.partial_y();
    BivariateSeries euler = qx.partial_x().shifted(2, 0);          // x^2 Q_xx
    euler += qy.partial_y().shifted(0, 2);                         // y^2 Q_yy
    euler += qx.partial_y().shifted(1, 1).scaled(Rational(2));     // 2xy Q_xy
    euler += qx.shifted(1, 0).scaled(Rational(2));                 // 2x Q_x
    euler += qy.shifted(0, 1).scaled(Rational(2));                 // 2y Q_y
    BivariateSeries residual =
        BivariateSeries::one_minus_sum_squared(order) * euler;
    residual -= q.shifted(1, 0).scaled(Rational(2));
    return residual.vanishes_up_to(order);
}

bool boundary_conditions_hold(const BivariateSeries& q) {
    const int order = q.truncation_order();
    if (q.coeff(0, 0) != Rational(1)) return false;
    for (int k = 1; k <= order; ++k) {
        if (!q.coeff(0, k).is_zero()) return false;
    }
    for (int n = 0; n <= order; ++n) {
        if (q.coeff(n, 0) != Rational(1)) return false;
    }
    const BivariateSeries qx = q.partial_x();
    const BivariateSeries qy = q.partial_y();
    for (int n = 0; n + 1 <= order; ++n) {
        // x-slice of dQ/dx must match the expansion of 1/(1-x)^2
        if (qx.coeff(n, 0) != Rational(n + 1)) return false;
    }
    for (int k = 0; k + 1 <= order; ++k) {
        if (!qy.coeff(0, k).is_zero()) return false;
        // y-slice of dQ/dx: coefficients 2/(k+2)
        if (qx.coeff(0, k) != Rational(2, static_cast<long long>(k) + 2)) return false;
    }
    return true;
}

bool diagonal_probability_identity_holds(int max_l, const VertexProbabilityTable& p) {
    if (p.max_n() < max_l) {
        throw std::invalid_argument("diagonal identity: table too small");
    }
    for (int l = 0; l <= max_l; ++l) {
        const Rational expected =
            pow(Rational(2), static_cast<unsigned>(l)) /
            Rational(factorial(l) * factorial(l + 1));
        if (p.at(l, l) != expected) return false;
    }
    return true;
}

}  // namespace convchain
