#include "metembed/metric.hpp"

#include "metembed/errors.hpp"

#include <deque>

namespace metembed {

namespace {

void bfs(const std::vector<std::vector<VertexId>>& adj, VertexId source,
         std::vector<std::int32_t>& dist) {
    dist.assign(adj.size(), -1);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

std::vector<std::int32_t> bfs_distances(const LevelGraph& g, VertexId source) {
    std::vector<std::int32_t> dist;
    bfs(g.adjacency(), source, dist);
    return dist;
}

DistanceMatrix shortest_path_metric(const LevelGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    const auto adj = g.adjacency();
    DistanceMatrix d(n, n);
    std::vector<std::int32_t> dist;
    for (Eigen::Index s = 0; s < n; ++s) {
        bfs(adj, static_cast<VertexId>(s), dist);
        for (Eigen::Index t = 0; t < n; ++t) {
            if (dist[t] < 0)
                throw StructuralError("graph is disconnected: vertex " + std::to_string(t) +
                                      " unreachable from " + std::to_string(s));
            d(s, t) = dist[t];
        }
    }
    return d;
}

}  // namespace metembed
