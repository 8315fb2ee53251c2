#include "doctest.h"
#include "oracles.hpp"

#include "metembed/errors.hpp"
#include "metembed/graph.hpp"
#include "metembed/io.hpp"
#include "metembed/metric.hpp"

#include <set>

using namespace metembed;

namespace {

VertexAddress addr(Family f, const char* text) { return parse_address(f, text); }

}  // namespace

TEST_CASE("base and level-2 sizes") {
    auto l0 = build_graph(Family::laakso, 0);
    CHECK(l0.vertex_count() == 2);
    CHECK(l0.edges().size() == 1);

    auto l2 = build_graph(Family::laakso, 2);
    CHECK(l2.vertex_count() == 30);
    CHECK(l2.edges().size() == 36);

    auto d2 = build_graph(Family::diamond, 2);
    CHECK(d2.vertex_count() == 12);
    CHECK(d2.edges().size() == 16);
}

TEST_CASE("counts match the closed forms up to level 4") {
    for (Family f : {Family::laakso, Family::diamond}) {
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(n);
            auto g = build_graph(f, n);
            CHECK(static_cast<std::int64_t>(g.vertex_count()) == expected_vertex_count(f, n));
            CHECK(static_cast<std::int64_t>(g.edges().size()) == expected_edge_count(f, n));
            auto reach = bfs_distances(g, 0);
            for (auto r : reach) CHECK(r >= 0);
        }
    }
    CHECK(expected_vertex_count(Family::laakso, 6) == 37326);
}

TEST_CASE("level cap") {
    CHECK_THROWS_AS(build_graph(Family::laakso, 7), CapacityError);
    CHECK_NOTHROW(build_graph(Family::diamond, 1, BuildOptions{1}));
    CHECK_THROWS_AS(build_graph(Family::diamond, 2, BuildOptions{1}), CapacityError);
    CHECK_THROWS_AS(build_graph(Family::laakso, -1), ValidationError);
}

TEST_CASE("edges are sorted pairs without duplicates") {
    for (Family f : {Family::laakso, Family::diamond}) {
        auto g = build_graph(f, 3);
        std::set<Edge> seen;
        for (auto [u, v] : g.edges()) {
            CHECK(u < v);
            CHECK(seen.insert({u, v}).second);
        }
        CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
    }
}

TEST_CASE("shortest path metric") {
    auto l1 = build_graph(Family::laakso, 1);
    auto d1 = shortest_path_metric(l1);
    CHECK(d1(l1.anchor(Anchor::L), l1.anchor(Anchor::R)) == 2);

    for (int n = 0; n <= 3; ++n) {
        auto g = build_graph(Family::laakso, n);
        auto d = shortest_path_metric(g);
        CHECK(d == oracle::floyd_warshall(g));
        const int span = 1 << (2 * n);
        const auto a = g.anchor(Anchor::A), u = g.anchor(Anchor::U);
        CHECK(d(a, u) == span);
        CHECK(d.diagonal().isZero());
        for (auto [x, y] : g.edges()) CHECK(d(x, y) == 1);
        // Every vertex of the Laakso graph lies on an A-U geodesic.
        for (Eigen::Index v = 0; v < d.rows(); ++v) CHECK(d(a, v) + d(v, u) == span);
        CHECK(is_metric(d));
    }
    for (int n = 0; n <= 3; ++n) {
        auto g = build_graph(Family::diamond, n);
        CHECK(shortest_path_metric(g) == oracle::floyd_warshall(g));
    }
}

TEST_CASE("address resolution and gluing") {
    auto l2 = build_graph(Family::laakso, 2);
    CHECK(l2.resolve(addr(Family::laakso, "C:U")) == l2.resolve(addr(Family::laakso, "E:A")));
    CHECK(l2.resolve(addr(Family::laakso, "C:U")) == l2.anchor(Anchor::L));
    CHECK(l2.resolve(addr(Family::laakso, "Y:U")) == l2.anchor(Anchor::T));
    CHECK(l2.resolve(addr(Family::laakso, "D:U")) == l2.anchor(Anchor::R));
    CHECK(l2.resolve(addr(Family::laakso, "Z:U")) == l2.anchor(Anchor::U));

    auto l1 = build_graph(Family::laakso, 1);
    CHECK(l1.resolve(addr(Family::laakso, "A")) == l1.anchor(Anchor::A));

    auto d2 = build_graph(Family::diamond, 2);
    CHECK(d2.resolve(addr(Family::diamond, "P1a:T")) == d2.anchor(Anchor::P));
    CHECK(d2.resolve(addr(Family::diamond, "P1b:S")) == d2.anchor(Anchor::P));
    CHECK(d2.resolve(addr(Family::diamond, "P2b:T")) == d2.anchor(Anchor::T));
}

TEST_CASE("malformed addresses are rejected") {
    auto l2 = build_graph(Family::laakso, 2);
    CHECK_THROWS_AS(parse_address(Family::laakso, "Q"), ValidationError);
    CHECK_THROWS_AS(parse_address(Family::laakso, "P1a:S"), ValidationError);
    CHECK_THROWS_AS(parse_address(Family::laakso, "C.:U"), ValidationError);
    CHECK_THROWS_AS(l2.resolve(addr(Family::laakso, "C.E.Y:U")), ValidationError);
    CHECK_THROWS_AS(l2.anchor(Anchor::S), ValidationError);
    auto l0 = build_graph(Family::laakso, 0);
    CHECK_THROWS_AS(l0.anchor(Anchor::L), ValidationError);
}

TEST_CASE("canonical addresses are total and idempotent") {
    for (Family f : {Family::laakso, Family::diamond}) {
        auto g = build_graph(f, 3);
        std::set<std::string> names;
        for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
            const auto& canon = g.canonical_address(v);
            CHECK(g.resolve(canon) == v);
            CHECK(parse_address(f, format_address(canon)) == canon);
            CHECK(names.insert(format_address(canon)).second);
            auto all = g.aliases(v);
            REQUIRE(!all.empty());
            CHECK(all.front() == canon);
            for (const auto& a : all) {
                CHECK(g.resolve(a) == v);
                CHECK(!address_less(f, a, canon));
            }
        }
    }
}

TEST_CASE("copy members") {
    auto l2 = build_graph(Family::laakso, 2);
    auto c = l2.copy_members(std::vector<Branch>{Branch::C});
    CHECK(c.size() == 6);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(std::count(c.begin(), c.end(), l2.anchor(Anchor::T)) == 1);
    CHECK(std::count(c.begin(), c.end(), l2.anchor(Anchor::L)) == 1);
    CHECK(l2.copy_members(std::vector<Branch>{}).size() == 30);
}

TEST_CASE("builds are deterministic") {
    for (Family f : {Family::laakso, Family::diamond})
        CHECK(export_graph(build_graph(f, 3), GraphFormat::json) ==
              export_graph(build_graph(f, 3), GraphFormat::json));
}
