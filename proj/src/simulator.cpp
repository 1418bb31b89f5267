#include "convchain/simulator.hpp"

#include "convchain/rational.hpp"
#include "convchain/stats.hpp"
#include "convchain/vertex_distribution.hpp"
#include "convchain/volume_moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace convchain {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix_step(std::uint64_t& state) {
    state += kGolden;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

ReplicateRng::ReplicateRng(std::uint64_t seed, std::uint64_t replicate) {
    // avalanche the pair so nearby replicates get unrelated streams
    std::uint64_t s = seed;
    std::uint64_t mixed = splitmix_step(s) ^ (replicate * kGolden + 1);
    state_ = splitmix_step(mixed);
}

std::uint64_t ReplicateRng::next_u64() { return splitmix_step(state_); }

double ReplicateRng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Point2D fold_to_triangle(double u, double v) {
    if (u + v > 1.0) return {1.0 - u, 1.0 - v};
    return {u, v};
}

Point2D sample_point(ReplicateRng& rng) {
    const double u = rng.next_double();
    const double v = rng.next_double();
    return fold_to_triangle(u, v);
}

int orientation(const Point2D& a, const Point2D& b, const Point2D& c) {
    const double lhs = (b.x - a.x) * (c.y - a.y);
    const double rhs = (b.y - a.y) * (c.x - a.x);
    const double det = lhs - rhs;
    const double detsum = std::abs(lhs) + std::abs(rhs);
    constexpr double kErrBound = 3.3306690738754716e-16;  // (3 + 16 eps) eps
    if (std::abs(det) > kErrBound * detsum) {
        return det > 0.0 ? 1 : -1;
    }
    const Rational ax = Rational::from_double_exact(a.x);
    const Rational ay = Rational::from_double_exact(a.y);
    const Rational exact = (Rational::from_double_exact(b.x) - ax) *
                               (Rational::from_double_exact(c.y) - ay) -
                           (Rational::from_double_exact(b.y) - ay) *
                               (Rational::from_double_exact(c.x) - ax);
    return exact.sign();
}

namespace {

bool lex_less(const Point2D& a, const Point2D& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

bool same_point(const Point2D& a, const Point2D& b) {
    return a.x == b.x && a.y == b.y;
}

double shoelace_area(const std::vector<Point2D>& poly) {
    double twice = 0.0;
    const size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const Point2D& p = poly[i];
        const Point2D& q = poly[(i + 1) % m];
        twice += p.x * q.y - q.x * p.y;
    }
    return twice / 2.0;
}

double shoelace_area_exact(const std::vector<Point2D>& poly) {
    Rational twice;
    const size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
        const Point2D& p = poly[i];
        const Point2D& q = poly[(i + 1) % m];
        twice += Rational::from_double_exact(p.x) * Rational::from_double_exact(q.y) -
                 Rational::from_double_exact(q.x) * Rational::from_double_exact(p.y);
    }
    return (twice / Rational(2)).to_double();
}

ChainSample build_chain(const std::vector<Point2D>& points, bool exact_area) {
    ChainSample sample;
    sample.n = static_cast<int>(points.size());

    std::vector<Point2D> all;
    all.reserve(points.size() + 2);
    all.push_back({0.0, 1.0});
    all.push_back({1.0, 0.0});
    all.insert(all.end(), points.begin(), points.end());
    std::sort(all.begin(), all.end(), lex_less);
    all.erase(std::unique(all.begin(), all.end(), same_point), all.end());

    const size_t m = all.size();
    std::vector<Point2D> hull(2 * m);
    size_t h = 0;
    for (size_t i = 0; i < m; ++i) {  // lower chain
        while (h >= 2 && orientation(hull[h - 2], hull[h - 1], all[i]) <= 0) --h;
        hull[h++] = all[i];
    }
    const size_t lower = h + 1;
    for (size_t i = m - 1; i-- > 0;) {  // upper chain
        while (h >= lower && orientation(hull[h - 2], hull[h - 1], all[i]) <= 0) --h;
        hull[h++] = all[i];
    }
    hull.resize(m > 1 ? h - 1 : h);

    // rotate so the list starts at the anchor (1, 0)
    const auto start = std::find_if(hull.begin(), hull.end(), [](const Point2D& p) {
        return p.x == 1.0 && p.y == 0.0;
    });
    std::rotate(hull.begin(), start, hull.end());

    sample.vertex_count = static_cast<int>(hull.size()) - 2;
    sample.area = hull.size() >= 3
                      ? (exact_area ? shoelace_area_exact(hull) : shoelace_area(hull))
                      : 0.0;
    sample.normalized_volume = 2.0 * sample.area;
    sample.hull = std::move(hull);
    return sample;
}

struct BlockStats {
    double sum_n = 0.0, sum_n2 = 0.0, sum_n3 = 0.0, sum_n4 = 0.0;
    std::vector<double> sum_v;  // powers 1 .. 2*max_k, in replicate order
    std::vector<long long> hist;
};

constexpr long long kBlockSize = 8192;

}  // namespace

ChainSample convex_chain(const std::vector<Point2D>& points) {
    return build_chain(points, false);
}

SimSummary estimate(const SimParams& params) {
    if (params.samples < 1) throw std::invalid_argument("estimate: samples must be positive");
    if (params.n < 0) throw std::invalid_argument("estimate: n must be nonnegative");
    if (params.max_k < 1) throw std::invalid_argument("estimate: max_k must be positive");
    if (params.jobs < 1) throw std::invalid_argument("estimate: jobs must be positive");

    const int n = params.n;
    const int powers = 2 * params.max_k;
    const long long blocks = (params.samples + kBlockSize - 1) / kBlockSize;
    std::vector<BlockStats> block_stats(blocks);

    std::atomic<long long> next_block{0};
    auto worker = [&]() {
        std::vector<Point2D> points(n);
        for (;;) {
            const long long b = next_block.fetch_add(1);
            if (b >= blocks) return;
            BlockStats stats;
            stats.sum_v.assign(powers, 0.0);
            stats.hist.assign(n + 1, 0);
            const long long begin = b * kBlockSize;
            const long long end = std::min(begin + kBlockSize, params.samples);
            for (long long r = begin; r < end; ++r) {
                ReplicateRng rng(params.seed, static_cast<std::uint64_t>(r));
                for (int i = 0; i < n; ++i) points[i] = sample_point(rng);
                const ChainSample chain = build_chain(points, params.exact_area);
                const double nn = chain.vertex_count;
                stats.sum_n += nn;
                stats.sum_n2 += nn * nn;
                stats.sum_n3 += nn * nn * nn;
                stats.sum_n4 += nn * nn * nn * nn;
                double vp = 1.0;
                for (int j = 0; j < powers; ++j) {
                    vp *= chain.normalized_volume;
                    stats.sum_v[j] += vp;
                }
                ++stats.hist[chain.vertex_count];
            }
            block_stats[b] = std::move(stats);
        }
    };

    const int jobs = static_cast<int>(std::min<long long>(params.jobs, blocks));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // merge in block order so results do not depend on the worker count
    BlockStats total;
    total.sum_v.assign(powers, 0.0);
    total.hist.assign(n + 1, 0);
    for (const auto& b : block_stats) {
        total.sum_n += b.sum_n;
        total.sum_n2 += b.sum_n2;
        total.sum_n3 += b.sum_n3;
        total.sum_n4 += b.sum_n4;
        for (int j = 0; j < powers; ++j) total.sum_v[j] += b.sum_v[j];
        for (int k = 0; k <= n; ++k) total.hist[k] += b.hist[k];
    }

    const double m = static_cast<double>(params.samples);
    auto mean_and_se = [&](double sum, double sum_sq, double* se) {
        const double mean = sum / m;
        if (params.samples < 2) {
            *se = std::numeric_limits<double>::infinity();
        } else {
            const double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1.0));
            *se = std::sqrt(var / m);
        }
        return mean;
    };

    SimSummary s;
    s.n = n;
    s.samples = params.samples;
    s.seed = params.seed;
    s.max_k = params.max_k;
    s.mean_vertex_count = mean_and_se(total.sum_n, total.sum_n2, &s.se_mean_vertex_count);
    s.var_vertex_count =
        params.samples < 2
            ? 0.0
            : std::max(0.0, (total.sum_n2 - m * s.mean_vertex_count * s.mean_vertex_count) /
                                (m - 1.0));
    s.mean_vertex_count_sq =
        mean_and_se(total.sum_n2, total.sum_n4, &s.se_mean_vertex_count_sq);
    s.mean_volume_pow.resize(params.max_k);
    s.se_volume_pow.resize(params.max_k);
    for (int j = 1; j <= params.max_k; ++j) {
        s.mean_volume_pow[j - 1] =
            mean_and_se(total.sum_v[j - 1], total.sum_v[2 * j - 1], &s.se_volume_pow[j - 1]);
    }
    s.vertex_count_hist = total.hist;
    s.vertex_frequency.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        s.vertex_frequency[k] = static_cast<double>(total.hist[k]) / m;
    }
    return s;
}

ExactReference exact_reference(int n, int max_k) {
    if (n < 0 || max_k < 1) throw std::invalid_argument("exact_reference: bad arguments");
    ExactReference ref;
    ref.n = n;
    if (n == 0) {
        ref.mean_vertex_count = 0.0;
        ref.mean_vertex_count_sq = 0.0;
        ref.volume_moments.assign(max_k, 0.0);
        ref.vertex_probability = {1.0};
        return ref;
    }
    ref.mean_vertex_count = vertex_moment_closed(n, 1).to_double();
    ref.mean_vertex_count_sq = vertex_moment_closed(n, 2).to_double();
    ref.volume_moments.resize(max_k);
    for (int j = 1; j <= max_k; ++j) {
        ref.volume_moments[j - 1] = volume_moment_closed(n, j).to_double();
    }
    ref.vertex_probability.resize(n + 1);
    ref.vertex_probability[0] = 0.0;
    for (int k = 1; k <= n; ++k) {
        ref.vertex_probability[k] = vertex_probability_closed(n, k).to_double();
    }
    return ref;
}

CompareReport compare_to_exact(const SimSummary& summary, const ExactReference& exact,
                               double sigma, double alpha) {
    CompareReport report;
    if (summary.samples < 1) {
        report.error = "summary has no samples";
        return report;
    }
    if (summary.n != exact.n) {
        report.error = "summary and reference disagree on n";
        return report;
    }
    report.ok = true;

    auto add_stat = [&](std::string name, double empirical, double target, double se) {
        CompareReport::Stat st;
        st.name = std::move(name);
        st.empirical = empirical;
        st.exact = target;
        st.se = se;
        const double diff = std::abs(empirical - target);
        if (se > 0.0 && std::isfinite(se)) {
            st.z = diff / se;
        } else {
            st.z = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        }
        st.pass = st.z <= sigma;
        report.stats.push_back(std::move(st));
    };

    add_stat("mean_vertex_count", summary.mean_vertex_count, exact.mean_vertex_count,
             summary.se_mean_vertex_count);
    add_stat("mean_vertex_count_sq", summary.mean_vertex_count_sq,
             exact.mean_vertex_count_sq, summary.se_mean_vertex_count_sq);
    const int ks = static_cast<int>(
        std::min(summary.mean_volume_pow.size(), exact.volume_moments.size()));
    for (int j = 1; j <= ks; ++j) {
        add_stat("mean_volume_pow" + std::to_string(j), summary.mean_volume_pow[j - 1],
                 exact.volume_moments[j - 1], summary.se_volume_pow[j - 1]);
    }

    // chi-square of the vertex-count frequencies over k = 1..n
    report.chi_dof = std::max(0, summary.n - 1);
    if (summary.n == 0) {
        report.chi_statistic = 0.0;
        report.chi_p_value = 1.0;
        report.chi_pass = true;
    } else if (static_cast<int>(exact.vertex_probability.size()) < summary.n + 1) {
        report.ok = false;
        report.error = "reference probability vector too short";
        return report;
    } else {
        double stat = 0.0;
        bool valid = true;
        for (int k = 1; k <= summary.n; ++k) {
            const double expected =
                static_cast<double>(summary.samples) * exact.vertex_probability[k];
            if (expected <= 0.0) {
                valid = false;
                break;
            }
            const double observed =
                k < static_cast<int>(summary.vertex_count_hist.size())
                    ? static_cast<double>(summary.vertex_count_hist[k])
                    : 0.0;
            stat += (observed - expected) * (observed - expected) / expected;
        }
        report.chi_statistic = stat;
        if (!valid) {
            report.ok = false;
            report.error = "nonpositive expected cell count";
            return report;
        }
        report.chi_p_value = chi_square_pvalue(stat, report.chi_dof);
        report.chi_pass = report.chi_p_value >= alpha;
    }

    report.all_pass = report.chi_pass;
    for (const auto& st : report.stats) report.all_pass = report.all_pass && st.pass;
    return report;
}

}  // namespace convchain
