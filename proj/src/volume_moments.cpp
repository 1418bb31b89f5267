#include "convchain/volume_moments.hpp"

#include "convchain/combinatorics.hpp"

#include <stdexcept>

namespace convchain {

const char* to_string(MomentRoute route) {
    switch (route) {
        case MomentRoute::FromProbabilities: return "from-p";
        case MomentRoute::Recurrence: return "recurrence";
        case MomentRoute::ClosedForm: return "closed";
    }
    return "?";
}

MomentTable::MomentTable(int max_n, int max_k, MomentRoute route)
    : max_n_(max_n), max_k_(max_k) {
    if (max_n < 0 || max_k < 0) throw std::invalid_argument("MomentTable: negative bounds");
    q_.assign(max_n + 1, std::vector<Rational>(max_k + 1));
    route_.assign(max_n + 1, std::vector<MomentRoute>(max_k + 1, route));
}

const Rational& MomentTable::normalized(int n, int k) const {
    return q_.at(n).at(k);
}

Rational MomentTable::moment(int n, int k) const {
    return normalized(n, k) / binomial(n + k, k);
}

MomentRoute MomentTable::route(int n, int k) const {
    return route_.at(n).at(k);
}

MomentTable MomentTable::from_recurrence(int max_n, int max_k) {
    MomentTable t(max_n, max_k, MomentRoute::Recurrence);
    // moments E[V_n^k]; converted to the normalized table at the end
    std::vector<std::vector<Rational>> ev(max_n + 1, std::vector<Rational>(max_k + 1));
    ev[0][0] = Rational(1);  // E[V_0^k] = 0 for k >= 1
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            Rational sum;
            for (int l = 0; l <= k; ++l) {
                for (int m = 0; m < n; ++m) {
                    if (ev[m][l].is_zero()) continue;
                    sum += binomial(n - 1, m) * binomial(k, l) / binomial(n + k, m + l) *
                           ev[m][l];
                }
            }
            const long long nk = static_cast<long long>(n) + k;
            ev[n][k] = Rational(2 * static_cast<long long>(n), nk * (nk + 1)) * sum;
        }
    }
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            t.q_[n][k] = binomial(n + k, k) * ev[n][k];
        }
    }
    return t;
}

MomentTable MomentTable::from_closed_form(int max_n, int max_k) {
    MomentTable t(max_n, max_k, MomentRoute::ClosedForm);
    t.q_[0][0] = Rational(1);
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            t.q_[n][k] = binomial(n + k, k) * volume_moment_closed(n, k);
        }
    }
    return t;
}

MomentTable MomentTable::from_probabilities(int max_n, int max_k,
                                            const VertexProbabilityTable& p) {
    if (p.max_n() < max_n + max_k) {
        throw std::invalid_argument("MomentTable: probability table too small");
    }
    MomentTable t(max_n, max_k, MomentRoute::FromProbabilities);
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= max_k; ++k) {
            t.q_[n][k] = normalized_moment_from_probabilities(n, k, p);
        }
    }
    return t;
}

Rational normalized_moment_from_probabilities(int n, int k,
                                              const VertexProbabilityTable& p) {
    if (n < 0 || k < 0) throw std::invalid_argument("normalized moment: negative index");
    if (p.max_n() < n + k) throw std::invalid_argument("normalized moment: table too small");
    Rational sum;
    for (int i = 0; i <= n; ++i) {
        const Rational pi = p.at(n + k, i);
        if (pi.is_zero()) continue;
        sum += binomial(n + k - i, k) * pi;
    }
    return sum;
}

Rational volume_moment_closed(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("volume_moment_closed: bad arguments");
    const Rational denom = binomial(n + k, k);
    Rational sum;
    for (int i = 1; i <= n; ++i) {
        for (int l = i; l <= n + k; ++l) {
            Rational term = binomial(n + k - i, k) * binomial(n + k, l) *
                            elementary_symmetric(i, l);
            if ((l + i) % 2 != 0) term = -term;
            sum += term;
        }
    }
    return sum / denom;
}

Rational volume_moment_small_n(int n, int k) {
    if (k < 0) throw std::invalid_argument("volume_moment_small_n: negative k");
    const long long kk = k;
    if (n == 1) {
        return Rational(2, (kk + 1) * (kk + 2));
    }
    if (n == 2) {
        return Rational(4 * (kk - 3), (kk + 1) * (kk + 2) * (kk + 3)) +
               Rational(8, (kk + 1) * (kk + 2) * (kk + 2)) * harmonic(k + 2);
    }
    throw std::invalid_argument("volume_moment_small_n: only n in {1,2} is supported");
}

Rational volume_moment_harmonic(int n, int k) {
    if (n < 0) throw std::invalid_argument("volume_moment_harmonic: negative n");
    const long long nn = n;
    if (k == 1) {
        return Rational(1) - Rational(1, 3 * (nn + 1)) -
               Rational(2, 3 * (nn + 1)) * harmonic(n + 1);
    }
    if (k == 2) {
        const Rational h = harmonic(n + 2);
        const Rational h2 = harmonic(n + 2, 2);
        return Rational(1) -
               Rational(18 * nn * nn + 106 * nn + 144,
                        27 * (nn + 1) * (nn + 2) * (nn + 3)) -
               Rational(36 * nn + 32, 27 * (nn + 1) * (nn + 2)) * h +
               Rational(4, 9 * (nn + 1) * (nn + 2)) * (h * h + h2);
    }
    throw std::invalid_argument("volume_moment_harmonic: only k in {1,2} is supported");
}

Rational volume_variance(int n) {
    if (n < 1) throw std::invalid_argument("volume_variance: n must be positive");
    const long long nn = n;
    const Rational h = harmonic(n + 1);
    const Rational h2 = harmonic(n + 1, 2);
    return Rational(7 * nn * nn + 24 * nn + 14,
                    27 * (nn + 1) * (nn + 1) * (nn + 2) * (nn + 2)) *
               h -
           Rational(1, 9 * (nn + 1) * (nn + 1) * (nn + 2)) * h * h +
           Rational(1, 9 * (nn + 1) * (nn + 2)) * h2 -
           Rational(55 * nn * nn * nn * nn + 391 * nn * nn * nn + 962 * nn * nn +
                        956 * nn + 336,
                    108 * (nn + 1) * (nn + 1) * (nn + 2) * (nn + 2) * (nn + 2) *
                        (nn + 3));
}

Rational missed_volume_moment(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("missed_volume_moment: bad arguments");
    Rational sum;
    for (int l = 0; l <= k; ++l) {
        Rational term = binomial(k, l) *
                        (l == 0 ? Rational(1) : volume_moment_closed(n, l));
        if (l % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

Rational missed_volume_moment_harmonic(int n, int k) {
    if (n < 1) throw std::invalid_argument("missed_volume_moment_harmonic: n must be positive");
    const long long nn = n;
    if (k == 1) {
        return Rational(2, 3 * (nn + 1)) * harmonic(n + 1) + Rational(1, 3 * (nn + 1));
    }
    if (k == 2) {
        // Constant term re-derived from the k <= 2 harmonic moment forms:
        // (52n + 144), checked against the alternating binomial sum.
        const Rational h = harmonic(n + 2);
        const Rational h2 = harmonic(n + 2, 2);
        return Rational(40, 27 * (nn + 1) * (nn + 2)) * h -
               Rational(52 * nn + 144, 27 * (nn + 1) * (nn + 2) * (nn + 3)) +
               Rational(4, 9 * (nn + 1) * (nn + 2)) * (h * h + h2);
    }
    throw std::invalid_argument("missed_volume_moment_harmonic: only k in {1,2} is supported");
}

Rational expected_area_harmonic(int n) {
    if (n < 0) throw std::invalid_argument("expected_area_harmonic: negative n");
    const long long nn = n;
    return Rational(1, 2) - Rational(1, 6 * (nn + 1)) -
           Rational(1, 3 * (nn + 1)) * harmonic(n + 1);
}

bool efron_identity_holds(int n) {
    if (n < 1) throw std::invalid_argument("efron_identity_holds: n must be positive");
    const Rational lhs = volume_moment_harmonic(n, 1);
    const Rational rhs =
        Rational(1) - vertex_moment_closed(n + 1, 1) / Rational(n + 1);
    return lhs == rhs;
}

bool normalized_moment_recurrence_holds(const MomentTable& table, int max_n, int max_k) {
    if (table.max_n() < max_n + 1 || table.max_k() < max_k) {
        throw std::invalid_argument("normalized_moment_recurrence_holds: table too small");
    }
    for (int n = 1; n <= max_n; ++n) {
        const Rational column_closed =
            Rational(n) + Rational(2, 3) - Rational(2, 3) * harmonic(n + 1);
        if (table.normalized(n, 1) != column_closed) return false;
        for (int k = 2; k <= max_k; ++k) {
            const long long s = static_cast<long long>(n) + k;
            const Rational rhs =
                Rational((s + 1) * (s + 2), 2) * table.normalized(n + 1, k) -
                Rational(s * (s + 1)) *
                    (table.normalized(n, k) + table.normalized(n + 1, k - 1)) +
                Rational((s - 1) * s, 2) *
                    (table.normalized(n - 1, k) +
                     Rational(2) * table.normalized(n, k - 1) +
                     table.normalized(n + 1, k - 2));
            if (table.normalized(n, k) != rhs) return false;
        }
    }
    return true;
}

}  // namespace convchain
