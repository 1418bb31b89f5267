#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convchain {

/// Arbitrary-precision rational number, always kept in canonical form:
/// lowest terms, denominator > 0, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(mpz_from_ll(n)) {}

    Rational(long long num, long long den)
        : Rational(mpz_from_ll(num), mpz_from_ll(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) {
            throw std::invalid_argument("Rational: zero denominator");
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpz_class& num) : v_(num) {}

    /// Parses "p/q" or a bare integer "p". Result is canonicalized.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(mpz_class(std::string(text)));
        }
        mpz_class num(std::string(text.substr(0, slash)));
        mpz_class den(std::string(text.substr(slash + 1)));
        return Rational(num, den);
    }

    /// Exact conversion of a finite double (doubles are dyadic rationals).
    static Rational from_double_exact(double x) {
        Rational r;
        mpq_set_d(r.v_.get_mpq_t(), x);
        return r;
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    /// Always emits the "p/q" form, e.g. "3/1" for integers.
    std::string to_string() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static mpz_class mpz_from_ll(long long n) {
        static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
        return mpz_class(static_cast<long>(n));
    }

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

}  // namespace convchain
