#include "doctest.h"

#include "metembed/errors.hpp"
#include "metembed/graph.hpp"
#include "metembed/metric.hpp"
#include "metembed/support_embedding.hpp"

#include <random>

using namespace metembed;

namespace {

std::vector<std::int64_t> range(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> out;
    for (auto i = a; i <= b; ++i) out.push_back(i);
    return out;
}

std::vector<std::int64_t> support_at(const LevelGraph& g, const char* text) {
    return support_of(parse_address(g.family(), text), g.level()).indices();
}

}  // namespace

TEST_CASE("base case supports") {
    auto g = build_graph(Family::laakso, 1);
    auto emb = support_embed(g);
    using V = std::vector<std::int64_t>;
    CHECK(emb.vectors[g.anchor(Anchor::A)].indices() == V{});
    CHECK(emb.vectors[g.anchor(Anchor::T)].indices() == V{1});
    CHECK(emb.vectors[g.anchor(Anchor::L)].indices() == V{1, 2});
    CHECK(emb.vectors[g.anchor(Anchor::R)].indices() == V{1, 3});
    CHECK(emb.vectors[g.anchor(Anchor::B)].indices() == V{1, 2, 3});
    CHECK(emb.vectors[g.anchor(Anchor::U)].indices() == V{1, 2, 3, 4});
    CHECK(emb.epsilon == 0);
}

TEST_CASE("anchor R agrees through both aliases") {
    // R = D.U = F.A: block 1 in full plus the phi block (block 3).
    for (int n : {2, 3}) {
        auto g = build_graph(Family::laakso, n);
        const std::int64_t q = std::int64_t{1} << (2 * (n - 1));
        auto expected = range(1, q);
        for (auto i : range(2 * q + 1, 3 * q)) expected.push_back(i);
        CHECK(support_at(g, "D:U") == expected);
        CHECK(support_at(g, "F:A") == expected);
        CHECK(support_embed(g).vectors[g.anchor(Anchor::R)].indices() == expected);
    }
    auto l3 = build_graph(Family::laakso, 3);
    auto r3 = support_at(l3, "D:U");
    CHECK(r3.front() == 1);
    CHECK(r3.size() == 32);
    CHECK(std::find(r3.begin(), r3.end(), 33) != r3.end());
    CHECK(r3.back() == 48);
}

TEST_CASE("anchor A has empty support at every level") {
    for (int n = 0; n <= 4; ++n) {
        auto g = build_graph(Family::laakso, n);
        CHECK(support_embed(g).vectors[g.anchor(Anchor::A)].size() == 0);
    }
}

TEST_CASE("hamming") {
    SupportVector l(1), r(1);
    l.insert_range(1, 2);
    r.insert(1);
    r.insert(3);
    CHECK(hamming(l, r) == 2);
    CHECK(hamming(l, l) == 0);
    for (int n = 0; n <= 4; ++n) {
        SupportVector empty(n), full(n);
        full.insert_range(1, full.dimension());
        CHECK(hamming(empty, full) == (std::int64_t{1} << (2 * n)));
    }
    CHECK_THROWS_AS(hamming(SupportVector(1), SupportVector(2)), ValidationError);
    CHECK_THROWS_AS(l.insert(5), ValidationError);
    CHECK_THROWS_AS(l.insert(0), ValidationError);
}

TEST_CASE("diamond graphs are rejected") {
    CHECK_THROWS_AS(support_embed(build_graph(Family::diamond, 2)), ValidationError);
}

TEST_CASE("aliases give the same support") {
    for (int n = 1; n <= 3; ++n) {
        auto g = build_graph(Family::laakso, n);
        for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
            auto canon = support_of(g.canonical_address(v), n);
            for (const auto& a : g.aliases(v)) CHECK(support_of(a, n) == canon);
        }
    }
}

TEST_CASE("depth law, adjacency and nesting") {
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        auto g = build_graph(Family::laakso, n);
        auto d = shortest_path_metric(g);
        auto emb = support_embed(g);
        const auto a = g.anchor(Anchor::A);
        for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
            CHECK(emb.vectors[v].size() == d(a, v));
        for (auto [u, v] : g.edges()) CHECK(hamming(emb.vectors[u], emb.vectors[v]) == 1);
        if (n > 3) continue;
        for (VertexId x = 0; x < static_cast<VertexId>(g.vertex_count()); ++x)
            for (VertexId y = 0; y < static_cast<VertexId>(g.vertex_count()); ++y) {
                if (d(a, x) + d(x, y) != d(a, y)) continue;
                CHECK(emb.vectors[x].subset_of(emb.vectors[y]));
                CHECK(hamming(emb.vectors[x], emb.vectors[y]) == d(x, y));
            }
    }
}

TEST_CASE("distortion bounds") {
    auto g1 = build_graph(Family::laakso, 1);
    auto r1 = verify_support_distortion(shortest_path_metric(g1), support_embed(g1));
    CHECK(r1.min_ratio == 1);
    CHECK(r1.max_ratio == 1);
    CHECK(r1.pairs == 15);

    for (int n = 2; n <= 3; ++n) {
        auto g = build_graph(Family::laakso, n);
        auto d = shortest_path_metric(g);
        auto emb = support_embed(g);
        auto r = verify_support_distortion(d, emb);
        CHECK(r.min_ratio >= make_rational(1, 2));
        CHECK(r.max_ratio == 1);
        // Thread count must not change the result.
        auto r4 = verify_support_distortion(d, emb, 4);
        CHECK(r4.min_ratio == r.min_ratio);
        CHECK(r4.witness_min == r.witness_min);
        CHECK(r4.witness_max == r.witness_max);
    }
}

TEST_CASE("a corrupted embedding is reported as a counterexample") {
    auto g = build_graph(Family::laakso, 2);
    auto emb = support_embed(g);
    emb.vectors[g.anchor(Anchor::U)] = emb.vectors[g.anchor(Anchor::A)];
    CHECK_THROWS_AS(verify_support_distortion(shortest_path_metric(g), emb), CounterexampleError);
}

TEST_CASE("unit-vector realization of the two lemmas") {
    CHECK(j_convex_slack(1) == 0);
    CHECK(j_convex_slack(16) == 0);
    CHECK(j_convex_slack(256) == 0);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 4;
        SupportVector x(n), y(n);
        const auto m = x.dimension();
        const auto split = std::uniform_int_distribution<std::int64_t>(0, m)(rng);
        std::bernoulli_distribution coin(0.5);
        for (std::int64_t i = 1; i <= split; ++i)
            if (coin(rng)) x.insert(i);
        for (std::int64_t i = split + 1; i <= m; ++i)
            if (coin(rng)) y.insert(i);

        // Lemma 1: max A < min B gives || sum_A e_i - sum_B e_i || = |A| + |B|.
        const Eigen::VectorXi diff = coefficients(x) - coefficients(y);
        CHECK(diff.lpNorm<1>() == x.size() + y.size());

        // Lemma 2: any signs on A, plus sum_B e_i, has norm at least |B|.
        Eigen::VectorXi signed_a = coefficients(x);
        for (Eigen::Index i = 0; i < signed_a.size(); ++i)
            if (coin(rng)) signed_a(i) = -signed_a(i);
        CHECK((signed_a + coefficients(y)).lpNorm<1>() >= y.size());
    }
}
