#pragma once

#include "convchain/rational.hpp"

namespace convchain {

/// n!, served from a lazily grown cache (cache capped; larger n computed directly).
mpz_class factorial(int n);

/// Exact binomial coefficient; 0 whenever k < 0 or k > n. Requires n >= 0.
mpz_class binomial_int(int n, int k);

/// binomial_int as a Rational, for use inside rational expressions.
Rational binomial(int n, int k);

/// Rising factorial a(a+1)...(a+n-1), with the empty product equal to 1.
Rational rising_factorial(const Rational& a, int n);

/// Generalized harmonic number: sum of i^(-order) for i = 1..n. harmonic(0, .) = 0.
Rational harmonic(int n, int order = 1);

/// Elementary symmetric polynomial e_k evaluated at the weights
/// a_j = 2/(j(j+1)), j = 1..l. Equals 1 at k = 0 and 0 for k > l.
/// Values are memoized row by row; safe for concurrent callers.
Rational elementary_symmetric(int k, int l);

}  // namespace convchain
