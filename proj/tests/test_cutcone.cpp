#include "doctest.h"
#include "oracles.hpp"

#include "metembed/certificates.hpp"
#include "metembed/cutcone.hpp"
#include "metembed/errors.hpp"
#include "metembed/graph.hpp"
#include "metembed/metric.hpp"

using namespace metembed;

namespace {

Rational q(std::int64_t p, std::int64_t r = 1) { return make_rational(p, r); }

DistanceMatrix path(int points) {
    DistanceMatrix d(points, points);
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) d(i, j) = std::abs(i - j);
    return d;
}

// K_{2,3}: vertices 0, 1 on one side, 2, 3, 4 on the other.
DistanceMatrix k23() {
    DistanceMatrix d(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) d(i, j) = i == j ? 0 : ((i < 2) == (j < 2) ? 2 : 1);
    return d;
}

}  // namespace

TEST_CASE("cuts") {
    CHECK(all_cuts(3, 0).size() == 3);
    CHECK(all_cuts(12, 0).size() == 2047);
    for (int root = 0; root < 4; ++root)
        for (const auto& c : all_cuts(4, root)) {
            CHECK(!c.contains(root));
            CHECK(c.mask != 0);
        }
    CHECK(canonical_cut(0b011, 3, 0) == CutMetric{0b100});
    CHECK(canonical_cut(0b100, 3, 0) == CutMetric{0b100});
    CutMetric c{0b0110};
    CHECK(c.separates(0, 1));
    CHECK(!c.separates(1, 2));
    CHECK(c.subset() == std::vector<VertexId>{1, 2});
}

TEST_CASE("small Laakso graphs embed isometrically") {
    for (int n = 0; n <= 1; ++n) {
        auto d = shortest_path_metric(build_graph(Family::laakso, n));
        auto m = solve_min_distortion(d);
        CHECK(m.c == 1);
        auto x = extract_embedding(m.measure, d);
        for (Eigen::Index i = 0; i < d.rows(); ++i)
            for (Eigen::Index j = 0; j < d.rows(); ++j) {
                Rational l1 = 0;
                for (Eigen::Index s = 0; s < x.cols(); ++s) l1 += abs(x(i, s) - x(j, s));
                CHECK(l1 == d(i, j));
            }
    }
}

TEST_CASE("the distortion program for the level-1 Laakso graph") {
    auto d = shortest_path_metric(build_graph(Family::laakso, 1));
    auto lp = distortion_program(d);
    CHECK(lp.A.cols() == 32);
    CHECK(lp.A.rows() == 30);
    auto s = simplex_solve(lp);
    CHECK(s.objective == 1);
    CHECK(certifies_optimum(lp, s));
}

TEST_CASE("two points") {
    for (int len : {1, 3}) {
        DistanceMatrix d(2, 2);
        d << 0, len, len, 0;
        auto m = solve_min_distortion(d);
        CHECK(m.c == 1);
        REQUIRE(m.measure.cuts.size() == 1);
        CHECK(m.measure.cuts[0].second == len);
    }
}

TEST_CASE("coordinates of a single cut") {
    CutMeasure m;
    m.points = 3;
    m.root = 2;
    m.scale = 1;
    m.cuts.push_back({CutMetric{0b001}, q(1)});
    auto x = extract_embedding(m);
    REQUIRE(x.cols() == 1);
    CHECK(x(0, 0) == 1);
    CHECK(x(1, 0) == 0);
    CHECK(x(2, 0) == 0);

    // On the path 0-1-2 the single cut leaves (1, 2) at distance 0.
    try {
        extract_embedding(m, path(3));
        FAIL("infeasible measure accepted");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("(0, 2)") != std::string::npos);
    }
    m.cuts[0].second = -1;
    CHECK_THROWS_AS(verify_cut_measure(m, path(3)), ValidationError);
}

TEST_CASE("paths and trees have distortion one") {
    for (int n = 2; n <= 6; ++n) CHECK(solve_min_distortion(path(n)).c == 1);
    DistanceMatrix star(4, 4);
    star << 0, 1, 1, 1, 1, 0, 2, 2, 1, 2, 0, 2, 1, 2, 2, 0;
    CHECK(solve_min_distortion(star).c == 1);
}

TEST_CASE("K_{2,3} needs distortion") {
    auto d = k23();
    Eigen::VectorXi k(5);
    k << -1, -1, 1, 1, 1;
    auto cert = verify_certificate(d, WeightAssignment(k));
    REQUIRE(cert.bound);
    CHECK(*cert.bound == q(4, 3));

    auto m = solve_min_distortion(d);
    CHECK(m.c >= *cert.bound);
    auto report = embedding_distortion(extract_embedding(m.measure, d), d);
    CHECK(report.min_ratio == 1);
    CHECK(report.max_ratio == m.c);

    for (int root = 1; root < 5; ++root) CHECK(solve_min_distortion(d, {root, 16}).c == m.c);
}

TEST_CASE("root choice does not change the optimum") {
    auto d = shortest_path_metric(build_graph(Family::laakso, 1));
    for (int root = 0; root < 6; ++root) CHECK(solve_min_distortion(d, {root, 16}).c == 1);
    CHECK_THROWS_AS(solve_min_distortion(d, {6, 16}), ValidationError);
}

TEST_CASE("capacity") {
    CHECK_THROWS_AS(solve_min_distortion(path(17)), CapacityError);
    CHECK_THROWS_AS(solve_min_distortion(path(6), {0, 5}), CapacityError);
}

TEST_CASE("every four-point metric with small distances embeds isometrically") {
    const auto metrics = oracle::four_point_metrics(3);
    CHECK(metrics.size() > 100);
    for (const auto& d : metrics) {
        CHECK(oracle::four_point_cut_decomposition(d));
        auto m = solve_min_distortion(d);
        CHECK(m.c == 1);
    }
}

TEST_CASE("level-2 diamond") {
    auto g = build_graph(Family::diamond, 2);
    auto d = shortest_path_metric(g);
    auto m = solve_min_distortion(d);
    CHECK(m.c >= q(5, 4));
    CHECK(m.c <= q(4, 3));

    auto x = extract_embedding(m.measure, d);
    CHECK(x.rows() == 12);
    auto report = embedding_distortion(x, d);
    CHECK(report.pairs == 66);
    CHECK(report.distortion() == m.c);

    // Weak duality against both certificate sources.
    CHECK(verify_certificate(d, paper_weights_D2(g)).bound_or_zero() <= m.c);
    CHECK(search_certificates(d, {}).bound <= m.c);
}
