#include "doctest.h"

#include "metembed/errors.hpp"
#include "metembed/io.hpp"

#include <sstream>

using namespace metembed;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
    return n;
}

}  // namespace

TEST_CASE("graph json") {
    auto doc = Json::parse(export_graph(build_graph(Family::laakso, 0), GraphFormat::json));
    CHECK(doc["family"] == "laakso");
    CHECK(doc["level"] == 0);
    CHECK(doc["vertices"].size() == 2);
    CHECK(doc["edges"].size() == 1);
    CHECK(doc["anchors"]["A"] == 0);
    CHECK(doc["anchors"]["U"] == 1);

    auto l2 = graph_to_json(build_graph(Family::laakso, 2));
    CHECK(l2["vertices"].size() == 30);
    CHECK(l2["anchors"].size() == 6);
    for (const auto& v : l2["vertices"]) CHECK(v.contains("canonical_address"));
    CHECK(l2["vertices"][1]["depth"] == 16);

    auto d2 = graph_to_json(build_graph(Family::diamond, 2));
    CHECK(d2["anchors"].contains("S"));
    CHECK(d2["anchors"].contains("Q"));
}

TEST_CASE("graph json round trip and tamper detection") {
    for (Family f : {Family::laakso, Family::diamond}) {
        auto g = build_graph(f, 2);
        auto doc = graph_to_json(g);
        auto back = graph_from_json(Json::parse(doc.dump()));
        CHECK(export_graph(back, GraphFormat::json) == export_graph(g, GraphFormat::json));

        auto edited = doc;
        edited["edges"][0][1] = 7;
        CHECK_THROWS_AS(graph_from_json(edited), ValidationError);
        auto renamed = doc;
        renamed["vertices"][3]["canonical_address"] = "Y:A";
        CHECK_THROWS_AS(graph_from_json(renamed), ValidationError);
    }
    CHECK_THROWS_AS(graph_from_json(Json{{"family", "laakso"}}), ValidationError);
    CHECK_THROWS_AS(graph_from_json(Json{{"family", "tree"}, {"level", 1}}), ValidationError);
}

TEST_CASE("dot export") {
    auto text = export_graph(build_graph(Family::laakso, 1), GraphFormat::dot);
    CHECK(text.rfind("graph ", 0) == 0);
    CHECK(count_lines_with(text, "[label=") == 6);
    CHECK(count_lines_with(text, " -- ") == 6);
    auto cycle = export_graph(build_graph(Family::diamond, 1), GraphFormat::dot);
    CHECK(count_lines_with(cycle, "[label=") == 4);
    CHECK(count_lines_with(cycle, " -- ") == 4);
}

TEST_CASE("metric csv") {
    auto g = build_graph(Family::diamond, 2);
    auto text = export_graph(g, GraphFormat::csv_metric);
    auto d = metric_from_csv(text);
    CHECK(d.rows() == 12);
    CHECK(d.cols() == 12);
    CHECK(d == d.transpose());
    CHECK(d == shortest_path_metric(g));
    CHECK(metric_to_csv(d) == text);

    CHECK_THROWS_AS(metric_from_csv(""), ValidationError);
    CHECK_THROWS_AS(metric_from_csv("0,1\n0,1\n2,0\n"), ValidationError);
    CHECK_THROWS_AS(metric_from_csv("0,1\n0,1\n"), ValidationError);
    CHECK_THROWS_AS(metric_from_csv("0,2\n0,1\n1,0\n"), ValidationError);
    CHECK_THROWS_AS(metric_from_csv("0,1,2\n0,1,5\n1,0,1\n5,1,0\n"), ValidationError);
    CHECK_THROWS_AS(metric_from_csv("0,1\n0,x\n1,0\n"), ValidationError);
    CHECK(metric_from_csv("0,1\r\n0, 3\r\n3,0\r\n")(0, 1) == 3);
}

TEST_CASE("rationals") {
    const Rational r = make_rational(-9, 12);
    auto j = rational_to_json(r);
    CHECK(j["num"] == -3);
    CHECK(j["den"] == 4);
    CHECK(rational_from_json(j) == r);

    const Rational huge = Rational(Integer("123456789012345678901234567891"), Integer(1024));
    auto h = rational_to_json(huge);
    CHECK(h["num"].is_string());
    CHECK(h["den"] == 1024);
    CHECK(rational_from_json(h) == huge);

    CHECK_THROWS_AS(rational_from_json(Json{{"num", 1}, {"den", 0}}), ValidationError);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", 1.5}, {"den", 2}}), ValidationError);
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(to_string(make_rational(3, 6)) == "1/2");
}

TEST_CASE("weights") {
    Eigen::VectorXi k = Eigen::VectorXi::Zero(5);
    k(1) = 2;
    k(3) = -1;
    auto doc = weights_to_json(k);
    CHECK(doc.dump() == R"({"weights":{"1":2,"3":-1}})");
    CHECK(weights_from_json(doc, 5) == k);
    CHECK_THROWS_AS(weights_from_json(doc, 3), ValidationError);
    CHECK_THROWS_AS(weights_from_json(Json::parse(R"({"weights":{"a":1}})"), 5), ValidationError);
    CHECK_THROWS_AS(weights_from_json(Json::parse(R"({"w":{}})"), 5), ValidationError);
}

TEST_CASE("result documents") {
    auto g = build_graph(Family::diamond, 2);
    auto cert = verify_certificate(shortest_path_metric(g), paper_weights_D2(g));
    auto doc = certificate_to_json(cert);
    CHECK(doc["s_plus"] == 40);
    CHECK(doc["s_minus"] == 32);
    CHECK(doc["bound"] == Json{{"num", 5}, {"den", 4}});
    CHECK(doc["kind"] == 0);
    CHECK(doc["weights"].size() == 8);

    auto l1 = build_graph(Family::laakso, 1);
    auto emb = l1_embed(l1);
    auto ej = interval_embedding_to_json(emb);
    CHECK(ej["resolution_den"] == 4);
    CHECK(ej["sets"][std::to_string(l1.anchor(Anchor::R))] == Json::parse("[[0,1],[2,3]]"));

    auto sj = support_embedding_to_json(support_embed(l1));
    CHECK(sj["epsilon"] == "0");
    CHECK(sj["vectors"][std::to_string(l1.anchor(Anchor::L))] == Json::parse("[1,2]"));

    auto m = solve_min_distortion(shortest_path_metric(l1));
    auto mj = min_distortion_to_json(m);
    CHECK(mj["c"] == Json{{"num", 1}, {"den", 1}});
    CHECK(!mj["cuts"].empty());
}
