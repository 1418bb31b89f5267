#include "convchain/vertex_distribution.hpp"

#include "convchain/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace convchain {

PgfSequence pgf_by_recurrence(int max_n) {
    if (max_n < 0) throw std::invalid_argument("pgf_by_recurrence: negative max_n");
    PgfSequence seq;
    seq.polys.reserve(max_n + 1);
    seq.polys.push_back(RationalPoly(Rational(1)));
    if (max_n >= 1) seq.polys.push_back(RationalPoly::monomial(1));
    for (int n = 2; n <= max_n; ++n) {
        const long long nn = n;
        // (2t/(n(n+1)) + 2(n-1)/(n+1)) * G_{n-1} - ((n-1)(n-2)/(n(n+1))) * G_{n-2}
        RationalPoly factor(std::vector<Rational>{
            Rational(2 * (nn - 1), nn + 1), Rational(2, nn * (nn + 1))});
        RationalPoly g = factor * seq.polys[n - 1];
        g -= Rational((nn - 1) * (nn - 2), nn * (nn + 1)) * seq.polys[n - 2];
        seq.polys.push_back(std::move(g));
    }
    return seq;
}

RationalPoly pgf_closed_form(int n) {
    if (n < 0) throw std::invalid_argument("pgf_closed_form: negative n");
    RationalPoly result(Rational(1));
    RationalPoly prefix(Rational(1));  // prod_{i=1..l} (1 - 2t/(i(i+1)))
    for (int l = 1; l <= n; ++l) {
        prefix = prefix * RationalPoly(std::vector<Rational>{
                              Rational(1), Rational(-2, static_cast<long long>(l) * (l + 1))});
        Rational c = binomial(n, l);
        if (l % 2 != 0) c = -c;
        result += c * prefix;
    }
    return result;
}

std::vector<Rational> pgf_values(const Rational& s, int max_n) {
    if (max_n < 0) throw std::invalid_argument("pgf_values: negative max_n");
    std::vector<Rational> values;
    values.reserve(max_n + 1);
    values.push_back(Rational(1));
    if (max_n >= 1) values.push_back(s);
    for (int n = 2; n <= max_n; ++n) {
        const long long nn = n;
        Rational v = (Rational(2, nn * (nn + 1)) * s + Rational(2 * (nn - 1), nn + 1)) *
                         values[n - 1] -
                     Rational((nn - 1) * (nn - 2), nn * (nn + 1)) * values[n - 2];
        values.push_back(std::move(v));
    }
    return values;
}

namespace {

// Sums prod_j i_j / (s_j (s_j + 1)) over compositions (i_1..i_k) of n,
// where s_j is the j-th partial sum. Recursion carries the partial product.
Rational composition_sum(int remaining, int parts_left, long long prefix_sum,
                         const Rational& partial) {
    if (parts_left == 1) {
        const long long s = prefix_sum + remaining;
        return partial * Rational(remaining) / Rational(s * (s + 1));
    }
    Rational total;
    for (int part = 1; part <= remaining - (parts_left - 1); ++part) {
        const long long s = prefix_sum + part;
        total += composition_sum(remaining - part, parts_left - 1, s,
                                 partial * Rational(part) / Rational(s * (s + 1)));
    }
    return total;
}

}  // namespace

Rational vertex_probability_composition(int n, int k, int cap) {
    if (n < 0) return Rational(0);
    if (n == 0) return Rational(k == 0 ? 1 : 0);
    if (k < 1 || k > n) return Rational(0);
    if (n > cap) {
        throw std::invalid_argument(
            "vertex_probability_composition: n = " + std::to_string(n) +
            " exceeds the enumeration cap " + std::to_string(cap));
    }
    return pow(Rational(2), static_cast<unsigned>(k)) *
           composition_sum(n, k, 0, Rational(1));
}

Rational vertex_probability_closed(int n, int k) {
    if (n < 0 || k < 0) return Rational(0);
    Rational sum;
    for (int l = k; l <= n; ++l) {
        Rational term = binomial(n, l) * elementary_symmetric(k, l);
        if ((l + k) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

VertexProbabilityTable vertex_probability_table(int max_n) {
    if (max_n < 0) throw std::invalid_argument("vertex_probability_table: negative max_n");
    VertexProbabilityTable table;
    table.rows.resize(max_n + 1);
    table.rows[0] = {Rational(1)};
    for (int n = 1; n <= max_n; ++n) {
        const long long nn = n;
        table.rows[n].assign(n + 1, Rational(0));
        const Rational scale(2, nn * (nn + 1));
        for (int k = 1; k <= n; ++k) {
            Rational rhs = Rational((nn - 1) * nn) * table.at(n - 1, k) -
                           Rational((nn - 2) * (nn - 1), 2) * table.at(n - 2, k) +
                           table.at(n - 1, k - 1);
            table.rows[n][k] = scale * rhs;
        }
    }
    return table;
}

Rational vertex_moment(const PgfSequence& pgf, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("vertex_moment: negative arguments");
    if (n > pgf.max_n()) throw std::invalid_argument("vertex_moment: n beyond the table");
    const RationalPoly& g = pgf.at(n);
    Rational sum;
    for (int k = 0; k <= g.degree(); ++k) {
        if (g.coeff(k).is_zero()) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(m));
        sum += Rational(p) * g.coeff(k);
    }
    return sum;
}

Rational vertex_moment_closed(int n, int m) {
    if (n < 1) throw std::invalid_argument("vertex_moment_closed: n must be positive");
    const Rational h1 = harmonic(n, 1);
    if (m == 1) {
        return Rational(2, 3) * h1 + Rational(1, 3);
    }
    if (m == 2) {
        return Rational(4, 9) * h1 * h1 + Rational(22, 27) * h1 +
               Rational(4, 9) * harmonic(n, 2) - Rational(25, 27) +
               Rational(4, 9 * (static_cast<long long>(n) + 1));
    }
    throw std::invalid_argument("vertex_moment_closed: only m in {1,2} is supported");
}

}  // namespace convchain
