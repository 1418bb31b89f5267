#pragma once

#include "convchain/bivariate.hpp"
#include "convchain/poly.hpp"
#include "convchain/rational.hpp"
#include "convchain/vertex_distribution.hpp"
#include "convchain/volume_moments.hpp"

#include <vector>

namespace convchain {

/// Taylor coefficients of the hypergeometric generating function as
/// polynomials in the marking variable: entry m is
/// prod_{i=0..m-1} (i(i+1) - 2t) / (m! (m+1)!).
std::vector<RationalPoly> hypergeom_coefficient_polys(int max_m);

/// Generating polynomial extracted from the hypergeometric series after the
/// substitution z -> z/(z-1): the alternating binomial combination of the
/// coefficient polynomials. Agrees with the recurrence and closed-form routes.
RationalPoly pgf_hypergeom(int n);

/// Partial sum of the Gauss series for F(a, b; c; z) in double precision.
/// Requires |z| < 1 and c not a nonpositive integer.
double gauss_2f1(double a, double b, double c, double z, int terms);

struct TransformCheck {
    bool pass = false;
    double max_abs_residual = 0.0;
};

/// Three-way numeric agreement at a rational point s with
/// beta = 1/2 + sqrt(1 + 8s)/2:
///   (1-z)^beta F(beta, beta+1; 2; z),
///   F(beta, 1-beta; 2; z/(z-1)),
///   and the exact partial sum sum_{l<=terms} z^l G_l(s).
/// Requires 1 + 8s >= 0 and |z| < 1/(|s| + |1-s|).
TransformCheck euler_transform_check(const Rational& s, double z, int terms,
                                     double tolerance = 1e-9);

/// |sum_{l<=terms} z^l G_l(s) - (1-z)^beta F(beta, beta+1; 2; z)|.
double lseries_partial_sum_residual(const Rational& s, double z, int terms);

/// Series whose (n, k) coefficient is the normalized moment at (n, k), up to
/// the requested total degree. The table must cover that degree.
BivariateSeries normalized_moment_series(const MomentTable& table, int truncation_order);

/// Coefficient identity for the degree-weighted series: (n+k)(n+k+1) times
/// the (n, k) coefficient of Q equals the same coefficient of
/// 2x Q / (1-x-y)^2, verified by exact truncated convolution for all
/// n + k <= D - 2.
bool weighted_series_identity_holds(const BivariateSeries& q);

/// Denominator-cleared residual of the second-order equation
/// x^2 Q_xx + y^2 Q_yy + 2xy Q_xy + 2x Q_x + 2y Q_y = 2x (1-x-y)^{-2} Q,
/// exact through the truncation order.
bool pde_residual_vanishes(const BivariateSeries& q);

/// Boundary slices of the series: the k = 0 row is all ones, the n = 0
/// column vanishes beyond (0,0), the x-derivative along y = 0 matches
/// 1/(1-x)^2, the y-derivative at x = 0 vanishes, and the x-derivative at
/// x = 0 has coefficients 2/(k+2).
bool boundary_conditions_hold(const BivariateSeries& q);

/// The diagonal probability equals 2^l / (l! (l+1)!) for all l <= max_l.
bool diagonal_probability_identity_holds(int max_l, const VertexProbabilityTable& p);

}  // namespace convchain
