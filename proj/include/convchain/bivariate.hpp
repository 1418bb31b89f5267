#pragma once

#include "convchain/rational.hpp"

#include <map>
#include <utility>

namespace convchain {

/// Bivariate formal power series truncated at a fixed total degree.
/// Coefficients above the truncation order are dropped; absent keys are zero.
class BivariateSeries {
public:
    using Key = std::pair<int, int>;

    explicit BivariateSeries(int truncation_order);

    int truncation_order() const { return trunc_; }
    const Rational& coeff(int i, int j) const;
    void set_coeff(int i, int j, Rational value);

    BivariateSeries& operator+=(const BivariateSeries& o);
    BivariateSeries& operator-=(const BivariateSeries& o);
    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }

    /// Truncated product; operands must share the truncation order.
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

    BivariateSeries partial_x() const;
    BivariateSeries partial_y() const;

    /// Multiplication by the monomial x^dx * y^dy (terms pushed above the
    /// truncation order are dropped).
    BivariateSeries shifted(int dx, int dy) const;

    BivariateSeries scaled(const Rational& s) const;

    bool is_zero() const { return c_.empty(); }

    /// All coefficients with total degree <= max_total_degree vanish.
    bool vanishes_up_to(int max_total_degree) const;

    const std::map<Key, Rational>& terms() const { return c_; }

    bool operator==(const BivariateSeries& o) const {
        return trunc_ == o.trunc_ && c_ == o.c_;
    }

    /// Expansion of (1 - x - y)^(-2): coefficient of x^a y^b is (a+b+1)*C(a+b, a).
    static BivariateSeries geometric_inverse_squared(int truncation_order);

    /// The polynomial (1 - x - y)^2 as a series.
    static BivariateSeries one_minus_sum_squared(int truncation_order);

private:
    int trunc_;
    std::map<Key, Rational> c_;
};

}  // namespace convchain
