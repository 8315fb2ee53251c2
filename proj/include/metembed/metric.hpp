#pragma once

#include "metembed/graph.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace metembed {

template <typename Scalar>
using Metric = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact shortest-path distances; symmetric with zero diagonal.
using DistanceMatrix = Metric<std::int32_t>;

/// Breadth-first search from every vertex. Throws StructuralError if disconnected.
DistanceMatrix shortest_path_metric(const LevelGraph& g);

/// Distances from one vertex.
std::vector<std::int32_t> bfs_distances(const LevelGraph& g, VertexId source);

/// Symmetric, zero diagonal, positive off-diagonal, triangle inequality.
template <typename Derived>
bool is_metric(const Eigen::MatrixBase<Derived>& d) {
    const Eigen::Index n = d.rows();
    if (d.cols() != n) return false;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (d(i, i) != 0) return false;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (d(i, j) != d(j, i)) return false;
            if (i != j && !(d(i, j) > 0)) return false;
        }
    }
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                if (d(i, j) > d(i, k) + d(k, j)) return false;
    return true;
}

}  // namespace metembed
