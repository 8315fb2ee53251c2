#pragma once

#include "metembed/distortion.hpp"
#include "metembed/graph.hpp"
#include "metembed/interval_set.hpp"
#include "metembed/metric.hpp"
#include "metembed/rational.hpp"

#include <cstdint>
#include <vector>

namespace metembed {

/// Grid of the level-n sets: g(0) = 1, g(n) = 4 g(n-1)^2. The squaring comes
/// from tiling the second, independent copy of the lower level.
std::uint64_t l1_resolution(int level);

struct L1Options {
    int max_level = 3;
};

/// Vertex a is sent to 4^n times the indicator of sets[a].
struct IntervalEmbedding {
    int level = 0;
    std::uint64_t resolution = 1;
    std::vector<IntervalSet> sets;  // indexed by VertexId
};

/// Set of the vertex named by `addr` at level `level`, denominator l1_resolution(level).
IntervalSet interval_set_of(const VertexAddress& addr, int level);

/// Throws ValidationError for diamond graphs, CapacityError above options.max_level.
IntervalEmbedding l1_embed(const LevelGraph& g, const L1Options& options = {});

/// Scans 4^n |H(a) xor H(b)| / d(a, b) and requires the result inside [3/4, 1].
DistortionReport verify_l1_distortion(const DistanceMatrix& d, const IntervalEmbedding& emb,
                                      int threads = 1);

struct IndependenceCheck {
    std::int64_t pairs = 0;
    std::int64_t violations = 0;
};

/// For every ordered vertex pair (a, b) of `lower`, compares the measure of
/// H(a) intersected with tile(H(b)) against the product of the two measures.
IndependenceCheck verify_independence(const LevelGraph& lower);

struct Lemma3Sides {
    bool holds = false;
    Rational lhs;  // 1 + min(s + t, 2 - s - t)
    Rational rhs;  // 4/3 (1 + s + t - 2 s t)
};

/// Throws ValidationError unless 0 <= s, t <= 1.
Lemma3Sides lemma3_check(const Rational& s, const Rational& t);

}  // namespace metembed
