#pragma once

#include "metembed/graph.hpp"
#include "metembed/metric.hpp"
#include "metembed/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>

namespace metembed {

/// Integer vertex weights with sum 0 (negative type) or 1 (hypermetric).
class WeightAssignment {
public:
    /// Throws ValidationError naming the sum when it is not 0 or 1, or when a
    /// sum-zero vector has no nonzero entry.
    explicit WeightAssignment(Eigen::VectorXi weights);

    const Eigen::VectorXi& weights() const { return k_; }
    int kind() const { return kind_; }
    Eigen::Index size() const { return k_.size(); }

private:
    Eigen::VectorXi k_;
    int kind_ = 0;
};

struct Certificate {
    WeightAssignment weights;
    std::int64_t s_plus = 0;   // sum over same-sign pairs of k_i k_j d_ij
    std::int64_t s_minus = 0;  // sum over opposite-sign pairs of |k_i k_j| d_ij
    std::optional<Rational> bound;  // s_plus / s_minus when s_minus > 0
    bool non_embeddable = false;    // s_minus == 0 < s_plus

    /// Bound if present, otherwise the "no information" value 0.
    Rational bound_or_zero() const { return bound ? *bound : Rational(0); }
};

/// Positive and negative pair sums. With k+ and k- the positive and negative
/// parts of k: s_plus = (k+' D k+ + k-' D k-) / 2 and s_minus = k+' D k-.
template <typename DerivedD, typename DerivedK>
std::pair<std::int64_t, std::int64_t> signed_pair_sums(const Eigen::MatrixBase<DerivedD>& d,
                                                       const Eigen::MatrixBase<DerivedK>& k) {
    const auto dd = d.template cast<std::int64_t>();
    const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> kp =
        k.template cast<std::int64_t>().cwiseMax(0);
    const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> km =
        (-k.template cast<std::int64_t>()).cwiseMax(0);
    const std::int64_t same = kp.dot(dd * kp) + km.dot(dd * km);
    const std::int64_t cross = kp.dot(dd * km);
    return {same / 2, cross};
}

/// Throws ValidationError when the weight vector length differs from the metric.
Certificate verify_certificate(const DistanceMatrix& d, const WeightAssignment& w);

/// +1 on the middle anchors L, R of copies C and F, -1 on those of D and E.
WeightAssignment paper_weights_L2(const LevelGraph& g);

/// +1 on the two middle vertices of opposite copies P1a and P2b, -1 on those of P1b and P2a.
WeightAssignment paper_weights_D2(const LevelGraph& g);

enum class SearchStrategy { exhaustive, local };

struct SearchOptions {
    SearchStrategy strategy = SearchStrategy::exhaustive;
    int lo = -1;
    int hi = 1;
    std::uint64_t budget = 1'000'000;            // local: evaluation limit
    std::uint64_t exhaustive_limit = 1'000'000'000;  // after sign pruning
    std::uint64_t seed = 1;
    std::optional<Eigen::VectorXi> start;  // local: initial point
    int threads = 1;
};

struct SearchResult {
    /// Best lower bound on the L1 distortion: the best certificate bound, or 1
    /// (every embedding has distortion at least 1) when no certificate beats it.
    Rational bound;
    std::optional<Certificate> best;
    std::uint64_t evaluations = 0;
    std::string region;  // human-readable description of what was covered
    std::optional<std::uint64_t> seed;
};

/// Exhaustive: every vector in [lo, hi]^n with sum in {0, 1}, up to negation
/// (the first nonzero weight is fixed positive when the range is symmetric;
/// sum -1 vectors stand for their sum 1 negations). Ties go to the
/// lexicographically least weight vector. Throws CapacityError when the
/// pruned space exceeds `exhaustive_limit`.
///
/// Local: single-coordinate +-1 moves keeping the sum in {0, 1}; a move is
/// taken only if it strictly improves the bound, the best neighbour winning
/// with ties toward smaller l1 weight norm. Restarts from seeded random points
/// until `budget` evaluations are spent.
SearchResult search_certificates(const DistanceMatrix& d, const SearchOptions& options);

}  // namespace metembed
