#pragma once

#include "metembed/distortion.hpp"
#include "metembed/graph.hpp"
#include "metembed/metric.hpp"
#include "metembed/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace metembed {

/// A subset of {1, ..., 4^n}: the support of a 0/1 combination of unit vectors.
class SupportVector {
public:
    SupportVector() = default;
    explicit SupportVector(int level);

    int level() const { return level_; }
    std::int64_t dimension() const { return dimension_; }

    bool contains(std::int64_t index) const;
    void insert(std::int64_t index);
    /// Inserts first, ..., last (1-based, inclusive).
    void insert_range(std::int64_t first, std::int64_t last);

    std::int64_t size() const;
    std::vector<std::int64_t> indices() const;
    bool subset_of(const SupportVector& other) const;

    friend bool operator==(const SupportVector&, const SupportVector&) = default;
    friend std::int64_t hamming(const SupportVector& u, const SupportVector& v);

private:
    int level_ = 0;
    std::int64_t dimension_ = 1;
    std::vector<std::uint64_t> words_;
};

/// |u symmetric-difference v|. Throws ValidationError on a level mismatch.
std::int64_t hamming(const SupportVector& u, const SupportVector& v);

/// Dense 0/1 coefficient vector in the unit-vector basis.
Eigen::VectorXi coefficients(const SupportVector& s);

/// m - min_j || e_1 + ... + e_j - e_{j+1} - ... - e_m ||_1 for the unit-vector
/// basis of length m; zero means the system is J-convex with no slack.
std::int64_t j_convex_slack(std::int64_t m);

struct SupportEmbedding {
    int level = 0;
    std::vector<SupportVector> vectors;  // indexed by VertexId
    Rational epsilon;
};

/// Support of the vertex named by `addr` in the level-`level` Laakso graph,
/// computed by descending the copy path. Any alias gives the same set.
SupportVector support_of(const VertexAddress& addr, int level);

/// Throws ValidationError for diamond graphs.
SupportEmbedding support_embed(const LevelGraph& g);

/// Scans |supp(a) xor supp(b)| / d(a, b) over all pairs and requires the result
/// inside [1/2, 1]; violations raise CounterexampleError.
DistortionReport verify_support_distortion(const DistanceMatrix& d, const SupportEmbedding& emb,
                                           int threads = 1);

}  // namespace metembed
