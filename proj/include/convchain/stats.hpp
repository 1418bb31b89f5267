#pragma once

namespace convchain {

/// Regularized upper incomplete gamma function Q(a, x), a > 0, x >= 0.
double regularized_gamma_upper(double a, double x);

/// Upper-tail p-value of a chi-square statistic with dof degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

}  // namespace convchain
