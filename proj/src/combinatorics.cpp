#include "convchain/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace convchain {

namespace {

constexpr int kFactorialCacheCap = 512;

std::mutex g_factorial_mutex;
std::vector<mpz_class> g_factorials = {mpz_class(1)};

std::mutex g_esp_mutex;
// g_esp_rows[l][k] = e_k(a_1..a_l)
std::vector<std::vector<Rational>> g_esp_rows = {{Rational(1)}};

Rational weight(int j) {
    // a_j = 2/(j(j+1))
    return Rational(2, static_cast<long long>(j) * (j + 1));
}

}  // namespace

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (n > kFactorialCacheCap) {
        mpz_class r = factorial(kFactorialCacheCap);
        for (int i = kFactorialCacheCap + 1; i <= n; ++i) r *= i;
        return r;
    }
    std::lock_guard lock(g_factorial_mutex);
    while (static_cast<int>(g_factorials.size()) <= n) {
        g_factorials.push_back(g_factorials.back() * static_cast<int>(g_factorials.size()));
    }
    return g_factorials[n];
}

mpz_class binomial_int(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (n <= kFactorialCacheCap) {
        mpz_class r = factorial(n) / factorial(k);
        return r / factorial(n - k);
    }
    k = std::min(k, n - k);
    mpz_class r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

Rational binomial(int n, int k) {
    return Rational(binomial_int(n, k));
}

Rational rising_factorial(const Rational& a, int n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: negative length");
    Rational r(1);
    Rational term = a;
    for (int i = 0; i < n; ++i) {
        r *= term;
        term += Rational(1);
    }
    return r;
}

Rational harmonic(int n, int order) {
    if (n < 0 || order < 1) throw std::invalid_argument("harmonic: bad arguments");
    Rational sum;
    for (int i = 1; i <= n; ++i) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i),
                      static_cast<unsigned long>(order));
        sum += Rational(mpz_class(1), p);
    }
    return sum;
}

Rational elementary_symmetric(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("elementary_symmetric: negative index");
    if (k > l) return Rational(0);
    std::lock_guard lock(g_esp_mutex);
    while (static_cast<int>(g_esp_rows.size()) <= l) {
        const int j = static_cast<int>(g_esp_rows.size());
        const auto& prev = g_esp_rows.back();
        const Rational aj = weight(j);
        std::vector<Rational> row(j + 1);
        row[0] = Rational(1);
        for (int i = 1; i <= j; ++i) {
            row[i] = (i < static_cast<int>(prev.size()) ? prev[i] : Rational(0)) +
                     aj * prev[i - 1];
        }
        g_esp_rows.push_back(std::move(row));
    }
    return g_esp_rows[l][k];
}

}  // namespace convchain
