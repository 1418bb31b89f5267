#include "convchain/bivariate.hpp"

#include "convchain/combinatorics.hpp"

#include <stdexcept>

namespace convchain {

namespace {
const Rational kZero;

void require_same_order(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.truncation_order() != b.truncation_order()) {
        throw std::invalid_argument("BivariateSeries: mismatched truncation orders");
    }
}
}  // namespace

BivariateSeries::BivariateSeries(int truncation_order) : trunc_(truncation_order) {
    if (truncation_order < 0) {
        throw std::invalid_argument("BivariateSeries: negative truncation order");
    }
}

const Rational& BivariateSeries::coeff(int i, int j) const {
    const auto it = c_.find({i, j});
    return it == c_.end() ? kZero : it->second;
}

void BivariateSeries::set_coeff(int i, int j, Rational value) {
    if (i < 0 || j < 0) throw std::invalid_argument("BivariateSeries: negative exponent");
    if (i + j > trunc_) throw std::invalid_argument("BivariateSeries: exponent above truncation order");
    if (value.is_zero()) {
        c_.erase({i, j});
    } else {
        c_[{i, j}] = std::move(value);
    }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
    require_same_order(*this, o);
    for (const auto& [key, v] : o.c_) {
        auto [it, inserted] = c_.try_emplace(key, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
    require_same_order(*this, o);
    for (const auto& [key, v] : o.c_) {
        auto [it, inserted] = c_.try_emplace(key, -v);
        if (!inserted) {
            it->second -= v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    require_same_order(a, b);
    BivariateSeries r(a.trunc_);
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) {
            const int i = ka.first + kb.first;
            const int j = ka.second + kb.second;
            if (i + j > r.trunc_) continue;
            auto [it, inserted] = r.c_.try_emplace({i, j}, va * vb);
            if (!inserted) it->second += va * vb;
        }
    }
    std::erase_if(r.c_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

BivariateSeries BivariateSeries::partial_x() const {
    BivariateSeries r(trunc_);
    for (const auto& [key, v] : c_) {
        if (key.first == 0) continue;
        r.c_[{key.first - 1, key.second}] = v * Rational(key.first);
    }
    return r;
}

BivariateSeries BivariateSeries::partial_y() const {
    BivariateSeries r(trunc_);
    for (const auto& [key, v] : c_) {
        if (key.second == 0) continue;
        r.c_[{key.first, key.second - 1}] = v * Rational(key.second);
    }
    return r;
}

BivariateSeries BivariateSeries::shifted(int dx, int dy) const {
    if (dx < 0 || dy < 0) throw std::invalid_argument("BivariateSeries: negative shift");
    BivariateSeries r(trunc_);
    for (const auto& [key, v] : c_) {
        const int i = key.first + dx;
        const int j = key.second + dy;
        if (i + j > trunc_) continue;
        r.c_[{i, j}] = v;
    }
    return r;
}

BivariateSeries BivariateSeries::scaled(const Rational& s) const {
    BivariateSeries r(trunc_);
    if (s.is_zero()) return r;
    for (const auto& [key, v] : c_) {
        r.c_[key] = v * s;
    }
    return r;
}

bool BivariateSeries::vanishes_up_to(int max_total_degree) const {
    for (const auto& [key, v] : c_) {
        if (key.first + key.second <= max_total_degree && !v.is_zero()) return false;
    }
    return true;
}

BivariateSeries BivariateSeries::geometric_inverse_squared(int truncation_order) {
    BivariateSeries r(truncation_order);
    for (int a = 0; a <= truncation_order; ++a) {
        for (int b = 0; a + b <= truncation_order; ++b) {
            r.c_[{a, b}] = Rational(a + b + 1) * binomial(a + b, a);
        }
    }
    return r;
}

BivariateSeries BivariateSeries::one_minus_sum_squared(int truncation_order) {
    BivariateSeries r(truncation_order);
    r.set_coeff(0, 0, Rational(1));
    if (truncation_order >= 1) {
        r.set_coeff(1, 0, Rational(-2));
        r.set_coeff(0, 1, Rational(-2));
    }
    if (truncation_order >= 2) {
        r.set_coeff(2, 0, Rational(1));
        r.set_coeff(1, 1, Rational(2));
        r.set_coeff(0, 2, Rational(1));
    }
    return r;
}

}  // namespace convchain
