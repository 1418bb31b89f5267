#pragma once

#include "convchain/rational.hpp"
#include "convchain/vertex_distribution.hpp"

#include <vector>

namespace convchain {

/// Which computation produced a moment-table cell.
enum class MomentRoute { FromProbabilities, Recurrence, ClosedForm };

const char* to_string(MomentRoute route);

/// Triangular table of normalized volume moments. The cell (n, k) stores the
/// binomial-weighted moment C(n+k, k) * E[V_n^k] of the normalized chain area
/// V_n in [0, 1], together with the route that computed it.
class MomentTable {
public:
    /// Fills the table by the double-sum recurrence in increasing n.
    static MomentTable from_recurrence(int max_n, int max_k);
    /// Fills the table from the closed-form alternating double sum.
    static MomentTable from_closed_form(int max_n, int max_k);
    /// Fills the table from a vertex-count probability table, which must
    /// extend to max_n + max_k points.
    static MomentTable from_probabilities(int max_n, int max_k,
                                          const VertexProbabilityTable& p);

    int max_n() const { return max_n_; }
    int max_k() const { return max_k_; }

    /// Binomial-weighted moment C(n+k, k) * E[V_n^k].
    const Rational& normalized(int n, int k) const;
    /// Plain moment E[V_n^k].
    Rational moment(int n, int k) const;
    MomentRoute route(int n, int k) const;

private:
    MomentTable(int max_n, int max_k, MomentRoute route);
    int max_n_, max_k_;
    std::vector<std::vector<Rational>> q_;
    std::vector<std::vector<MomentRoute>> route_;
};

/// Normalized moment as the binomial-weighted expectation over the
/// vertex-count distribution with n + k points.
Rational normalized_moment_from_probabilities(int n, int k,
                                              const VertexProbabilityTable& p);

/// E[V_n^k] by the closed-form double sum over the elementary-symmetric
/// constants; n >= 1, k >= 0.
Rational volume_moment_closed(int n, int k);

/// E[V_n^k] for one or two points, any k (harmonic closed forms).
Rational volume_moment_small_n(int n, int k);

/// E[V_n] and E[V_n^2] for any n >= 0 (harmonic closed forms).
Rational volume_moment_harmonic(int n, int k);

/// Variance of the raw (un-normalized) chain area; var of V_n is 4x this.
Rational volume_variance(int n);

/// k-th moment of the uncovered share 1 - V_n, by the alternating binomial sum.
Rational missed_volume_moment(int n, int k);

/// Harmonic closed forms for the first two moments of 1 - V_n.
Rational missed_volume_moment_harmonic(int n, int k);

/// First moment of the raw area: 1/2 - 1/(6(n+1)) - H_{n+1}/(3(n+1)).
Rational expected_area_harmonic(int n);

/// Exchangeability identity tying the expected normalized area at n points
/// to the expected vertex count at n + 1 points.
bool efron_identity_holds(int n);

/// Verifies the three-level recurrence of the normalized moments as an exact
/// residual on a filled table (which must extend to (max_n + 1, max_k)), plus
/// the harmonic closed form of the k = 1 column.
bool normalized_moment_recurrence_holds(const MomentTable& table, int max_n, int max_k);

}  // namespace convchain
