#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace convchain {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

/// One simulated chain: the hull of the anchors (0,1), (1,0) and n uniform
/// points in the right triangle, listed counterclockwise starting at (1,0).
struct ChainSample {
    int n = 0;
    std::vector<Point2D> hull;
    int vertex_count = 0;       // hull size minus the two anchors
    double area = 0.0;          // raw polygon area, in [0, 1/2]
    double normalized_volume = 0.0;  // 2 * area, in [0, 1]
};

/// Per-replicate deterministic stream: splitmix64 seeded from (seed, replicate).
class ReplicateRng {
public:
    ReplicateRng(std::uint64_t seed, std::uint64_t replicate);
    std::uint64_t next_u64();
    /// Uniform double in [0, 1) built from the top 53 bits.
    double next_double();

private:
    std::uint64_t state_;
};

/// Uniform point in the triangle by folding the unit square along u + v = 1.
Point2D fold_to_triangle(double u, double v);

Point2D sample_point(ReplicateRng& rng);

/// Sign of the orientation determinant for (a, b, c), with an exact rational
/// fallback when the floating-point value is within its error bound.
int orientation(const Point2D& a, const Point2D& b, const Point2D& c);

/// Strict convex hull of the points together with the two anchors
/// (monotone chain; collinear points are not vertices).
ChainSample convex_chain(const std::vector<Point2D>& points);

struct SimParams {
    int n = 1;
    long long samples = 1;
    std::uint64_t seed = 0;
    int max_k = 2;
    int jobs = 1;
    bool exact_area = false;
};

/// Aggregated statistics. Deterministic for fixed (n, samples, seed, max_k):
/// the worker count never changes any field.
struct SimSummary {
    int n = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    int max_k = 0;
    double mean_vertex_count = 0.0;
    double var_vertex_count = 0.0;
    double se_mean_vertex_count = 0.0;
    double mean_vertex_count_sq = 0.0;
    double se_mean_vertex_count_sq = 0.0;
    std::vector<double> mean_volume_pow;  // entry j-1: mean of V^j, j = 1..max_k
    std::vector<double> se_volume_pow;
    std::vector<long long> vertex_count_hist;  // entry k: replicates with N = k
    std::vector<double> vertex_frequency;
};

SimSummary estimate(const SimParams& params);

/// Exact reference values (as doubles) for a comparison at one n.
struct ExactReference {
    int n = 0;
    double mean_vertex_count = 0.0;
    double mean_vertex_count_sq = 0.0;
    std::vector<double> volume_moments;      // entry j-1: E[V^j]
    std::vector<double> vertex_probability;  // entry k: P(N = k)
};

ExactReference exact_reference(int n, int max_k);

struct CompareReport {
    bool ok = false;
    std::string error;
    struct Stat {
        std::string name;
        double empirical = 0.0;
        double exact = 0.0;
        double se = 0.0;
        double z = 0.0;
        bool pass = false;
    };
    std::vector<Stat> stats;
    double chi_statistic = 0.0;
    int chi_dof = 0;
    double chi_p_value = 1.0;
    bool chi_pass = false;
    bool all_pass = false;
};

/// z-scores of every mean against its exact value at the given sigma policy,
/// plus a chi-square goodness-of-fit of the vertex-count frequencies.
CompareReport compare_to_exact(const SimSummary& summary, const ExactReference& exact,
                               double sigma = 4.0, double alpha = 1e-4);

}  // namespace convchain
