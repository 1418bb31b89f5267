#include "convchain/poly.hpp"

#include <algorithm>

namespace convchain {

namespace {
const Rational kZero;
}

RationalPoly::RationalPoly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    trim();
}

RationalPoly RationalPoly::monomial(int degree, Rational coefficient) {
    RationalPoly p;
    if (!coefficient.is_zero()) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_[degree] = std::move(coefficient);
    }
    return p;
}

const Rational& RationalPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

Rational RationalPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        d[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    }
    return RationalPoly(std::move(d));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return RationalPoly(std::move(prod));
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

}  // namespace convchain
