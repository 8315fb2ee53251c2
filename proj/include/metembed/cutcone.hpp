#pragma once

#include "metembed/distortion.hpp"
#include "metembed/metric.hpp"
#include "metembed/rational.hpp"
#include "metembed/simplex.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

namespace metembed {

/// Cut semimetric of a vertex subset, stored as the side without the root.
struct CutMetric {
    std::uint32_t mask = 0;

    bool contains(int v) const { return (mask >> v) & 1u; }
    bool separates(int i, int j) const { return contains(i) != contains(j); }
    std::vector<VertexId> subset() const;

    friend bool operator==(const CutMetric&, const CutMetric&) = default;
};

/// Picks the side of `mask` that does not contain `root` among `points` vertices.
CutMetric canonical_cut(std::uint32_t mask, int points, int root);

/// All 2^(points-1) - 1 nontrivial cuts, in increasing mask order.
std::vector<CutMetric> all_cuts(int points, int root);

/// Nonnegative combination of cuts; d <= sum lambda_S delta_S <= scale * d when feasible.
struct CutMeasure {
    int points = 0;
    int root = 0;
    std::vector<std::pair<CutMetric, Rational>> cuts;
    Rational scale;
};

struct CutConeOptions {
    int root = 0;
    int max_points = 16;
};

struct MinDistortion {
    Rational c;
    CutMeasure measure;
    std::size_t pivots = 0;
};

/// The program behind solve_min_distortion: variables lambda_S (one per cut)
/// and mu, maximize mu subject to mu d_ij <= sum lambda_S delta_S(i,j) <= d_ij.
/// The optimum is 1/c and lambda / mu is an optimal cut measure.
LinearProgram<Rational> distortion_program(const DistanceMatrix& d, int root = 0);

/// Exact minimum L1 distortion. Throws CapacityError above options.max_points
/// and StructuralError if the solver's optimality certificate fails to check.
MinDistortion solve_min_distortion(const DistanceMatrix& d, const CutConeOptions& options = {});

using Coordinates = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// One column per cut: lambda_S times the indicator of the stored side.
Coordinates extract_embedding(const CutMeasure& m);

/// As above, after checking d <= sum lambda delta <= scale * d. Throws
/// ValidationError naming the first violated pair.
Coordinates extract_embedding(const CutMeasure& m, const DistanceMatrix& d);

void verify_cut_measure(const CutMeasure& m, const DistanceMatrix& d);

/// Exact min/max of ||x_i - x_j||_1 / d_ij over all pairs.
DistortionReport embedding_distortion(const Coordinates& x, const DistanceMatrix& d);

}  // namespace metembed
