#pragma once

#include "convchain/rational.hpp"

#include <vector>

namespace convchain {

/// Dense univariate polynomial with exact rational coefficients.
/// Canonical form: no trailing zero coefficients; the zero polynomial
/// stores an empty coefficient list and reports degree -1.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(Rational constant);
    explicit RationalPoly(std::vector<Rational> coefficients);

    static RationalPoly monomial(int degree, Rational coefficient = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& x) const;
    RationalPoly derivative() const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& s);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
    RationalPoly operator-() const;

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace convchain
