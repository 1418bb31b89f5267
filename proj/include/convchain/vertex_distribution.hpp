#pragma once

#include "convchain/poly.hpp"
#include "convchain/rational.hpp"

#include <vector>

namespace convchain {

/// Default cap on the composition-sum enumeration (2^(n-1) compositions).
constexpr int kCompositionCap = 20;

/// Probability generating functions of the vertex count, one polynomial per
/// point count n. Entry n has degree n, zero constant term for n >= 1, and
/// coefficients summing to 1.
struct PgfSequence {
    std::vector<RationalPoly> polys;

    int max_n() const { return static_cast<int>(polys.size()) - 1; }
    const RationalPoly& at(int n) const { return polys.at(n); }
};

/// Triangular table of vertex-count probabilities, rows[n][k] for 0 <= k <= n.
/// Out-of-range lookups return 0.
struct VertexProbabilityTable {
    std::vector<std::vector<Rational>> rows;

    int max_n() const { return static_cast<int>(rows.size()) - 1; }
    Rational at(int n, int k) const {
        if (n < 0 || n > max_n() || k < 0 || k >= static_cast<int>(rows[n].size())) {
            return Rational(0);
        }
        return rows[n][k];
    }
};

/// Builds the generating polynomials by the three-term recurrence, seeded
/// with the constant 1 and the identity polynomial.
PgfSequence pgf_by_recurrence(int max_n);

/// Closed-form generating polynomial: the alternating binomial sum of the
/// products prod_{i=1..l} (1 - 2t/(i(i+1))).
RationalPoly pgf_closed_form(int n);

/// Values G_0(s)..G_max(s) at a fixed rational point, via the scalar form of
/// the recurrence (cheaper than building polynomials when only values matter).
std::vector<Rational> pgf_values(const Rational& s, int max_n);

/// Probability of exactly k vertices by direct enumeration of the
/// compositions of n into k positive parts. Returns 0 outside 1 <= k <= n.
/// Throws when n exceeds the enumeration cap.
Rational vertex_probability_composition(int n, int k, int cap = kCompositionCap);

/// Probability of exactly k vertices via the alternating sum over the
/// elementary-symmetric constants. Valid for all n, k >= 0 (value 1 at (0,0),
/// 0 outside the triangular support).
Rational vertex_probability_closed(int n, int k);

/// Fills the probability triangle by the forward three-term recurrence.
VertexProbabilityTable vertex_probability_table(int max_n);

/// Raw moment of the vertex count: sum_k k^m * P(N_n = k).
Rational vertex_moment(const PgfSequence& pgf, int n, int m);

/// Harmonic-number closed forms for the first and second raw moments.
Rational vertex_moment_closed(int n, int m);

}  // namespace convchain
