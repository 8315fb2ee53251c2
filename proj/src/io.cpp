#include "metembed/io.hpp"

#include "metembed/errors.hpp"

#include <charconv>
#include <sstream>

namespace metembed {

namespace {

Json integer_to_json(const Integer& z) {
    if (auto v = to_int64(z)) return *v;
    return z.str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw ValidationError("expected an integer, got " + j.dump());
}

std::vector<std::int64_t> parse_row(std::string_view line) {
    std::vector<std::int64_t> out;
    while (!line.empty()) {
        auto comma = line.find(',');
        auto field = line.substr(0, comma);
        while (!field.empty() && (field.front() == ' ')) field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ValidationError("not an integer in metric CSV: '" + std::string(field) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view s) {
    if (s == "json") return GraphFormat::json;
    if (s == "dot") return GraphFormat::dot;
    if (s == "csv-metric") return GraphFormat::csv_metric;
    throw ValidationError("unknown format '" + std::string(s) + "' (json, dot, csv-metric)");
}

Json graph_to_json(const LevelGraph& g) {
    const auto depth = bfs_distances(g, g.anchor(source_anchor(g.family())));
    Json doc;
    doc["family"] = family_name(g.family());
    doc["level"] = g.level();
    Json vertices = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        vertices.push_back({{"id", v},
                            {"canonical_address",
                             format_address(g.canonical_address(static_cast<VertexId>(v)))},
                            {"depth", depth[v]}});
    }
    doc["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    Json anchors = Json::object();
    for (auto [role, id] : g.anchors()) anchors[std::string(anchor_name(role))] = id;
    doc["anchors"] = std::move(anchors);
    return doc;
}

LevelGraph graph_from_json(const Json& doc) {
    try {
        const Family family = parse_family(doc.at("family").get<std::string>());
        const int level = doc.at("level").get<int>();
        LevelGraph g = build_graph(family, level);
        const Json expected = graph_to_json(g);
        for (const char* key : {"vertices", "edges", "anchors"}) {
            if (doc.at(key) != expected.at(key))
                throw ValidationError(std::string("graph document field '") + key +
                                      "' does not match the " + std::string(family_name(family)) +
                                      " level " + std::to_string(level) + " construction");
        }
        return g;
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed graph document: ") + e.what());
    }
}

std::string metric_to_csv(const DistanceMatrix& d) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < d.cols(); ++i) out << (i ? "," : "") << i;
    out << '\n';
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.cols(); ++j) out << (j ? "," : "") << d(i, j);
        out << '\n';
    }
    return out.str();
}

DistanceMatrix metric_from_csv(std::string_view text) {
    std::vector<std::vector<std::int64_t>> rows;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line != "\r") rows.push_back(parse_row(line));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    if (rows.empty()) throw ValidationError("empty metric CSV");
    const auto n = static_cast<Eigen::Index>(rows.front().size());
    for (Eigen::Index i = 0; i < n; ++i)
        if (rows.front()[i] != i) throw ValidationError("metric CSV header must list ids 0..n-1");
    if (static_cast<Eigen::Index>(rows.size()) != n + 1)
        throw ValidationError("metric CSV has " + std::to_string(rows.size() - 1) +
                              " rows for " + std::to_string(n) + " ids");
    DistanceMatrix d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[i + 1].size()) != n)
            throw ValidationError("metric CSV row " + std::to_string(i) + " has wrong length");
        for (Eigen::Index j = 0; j < n; ++j) d(i, j) = static_cast<std::int32_t>(rows[i + 1][j]);
    }
    if (!is_metric(d)) throw ValidationError("metric CSV does not describe a metric");
    return d;
}

std::string export_graph(const LevelGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::json: return graph_to_json(g).dump(2) + "\n";
        case GraphFormat::csv_metric: return metric_to_csv(shortest_path_metric(g));
        case GraphFormat::dot: {
            std::ostringstream out;
            out << "graph " << family_name(g.family()) << g.level() << " {\n";
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                out << "  " << v << " [label=\""
                    << format_address(g.canonical_address(static_cast<VertexId>(v))) << "\"];\n";
            for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
            out << "}\n";
            return out.str();
        }
    }
    return {};
}

Json rational_to_json(const Rational& r) {
    return {{"num", integer_to_json(num_of(r))}, {"den", integer_to_json(den_of(r))}};
}

Rational rational_from_json(const Json& j) {
    try {
        Integer den = integer_from_json(j.at("den"));
        if (den == 0) throw ValidationError("zero denominator");
        return Rational(integer_from_json(j.at("num")), den);
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed rational: ") + e.what());
    }
}

Json report_to_json(const DistortionReport& r) {
    return {{"min_ratio", rational_to_json(r.min_ratio)},
            {"max_ratio", rational_to_json(r.max_ratio)},
            {"witness_min", {r.witness_min.first, r.witness_min.second}},
            {"witness_max", {r.witness_max.first, r.witness_max.second}},
            {"distortion", rational_to_json(r.distortion())},
            {"pairs", r.pairs}};
}

Json support_embedding_to_json(const SupportEmbedding& e) {
    Json vectors = Json::object();
    for (std::size_t v = 0; v < e.vectors.size(); ++v) vectors[std::to_string(v)] = e.vectors[v].indices();
    return {{"level", e.level}, {"epsilon", to_string(e.epsilon)}, {"vectors", std::move(vectors)}};
}

Json interval_embedding_to_json(const IntervalEmbedding& e) {
    Json sets = Json::object();
    for (std::size_t v = 0; v < e.sets.size(); ++v) {
        const auto& s = e.sets[v];
        const std::uint64_t k = e.resolution / s.denominator();
        Json cells = Json::array();
        for (auto [p, q] : s.cells()) cells.push_back({p * k, q * k});
        sets[std::to_string(v)] = std::move(cells);
    }
    return {{"level", e.level}, {"resolution_den", e.resolution}, {"sets", std::move(sets)}};
}

Json weights_to_json(const Eigen::VectorXi& k) {
    Json w = Json::object();
    for (Eigen::Index i = 0; i < k.size(); ++i)
        if (k(i) != 0) w[std::to_string(i)] = k(i);
    return {{"weights", std::move(w)}};
}

Eigen::VectorXi weights_from_json(const Json& doc, Eigen::Index points) {
    Eigen::VectorXi k = Eigen::VectorXi::Zero(points);
    try {
        for (const auto& [key, value] : doc.at("weights").items()) {
            std::int64_t id = -1;
            auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
            if (ec != std::errc{} || ptr != key.data() + key.size() || id < 0 || id >= points)
                throw ValidationError("weight key '" + key + "' is not a vertex id below " +
                                      std::to_string(points));
            k(id) = value.get<int>();
        }
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed weight document: ") + e.what());
    }
    return k;
}

Json certificate_to_json(const Certificate& c) {
    Json doc = weights_to_json(c.weights.weights());
    doc["s_plus"] = c.s_plus;
    doc["s_minus"] = c.s_minus;
    doc["bound"] = c.bound ? rational_to_json(*c.bound) : Json(nullptr);
    doc["kind"] = c.weights.kind();
    doc["non_embeddable"] = c.non_embeddable;
    return doc;
}

Json search_result_to_json(const SearchResult& r) {
    Json doc = r.best ? certificate_to_json(*r.best) : Json::object();
    doc["best_bound"] = rational_to_json(r.bound);
    doc["evaluations"] = r.evaluations;
    doc["region"] = r.region;
    if (r.seed) doc["seed"] = *r.seed;
    return doc;
}

Json min_distortion_to_json(const MinDistortion& m) {
    Json cuts = Json::array();
    for (const auto& [cut, lambda] : m.measure.cuts)
        cuts.push_back({{"subset", cut.subset()}, {"lambda", rational_to_json(lambda)}});
    return {{"c", rational_to_json(m.c)}, {"root", m.measure.root}, {"cuts", std::move(cuts)}};
}

Json coordinates_to_json(const Coordinates& x) {
    Json doc = Json::object();
    for (Eigen::Index v = 0; v < x.rows(); ++v) {
        Json row = Json::array();
        for (Eigen::Index s = 0; s < x.cols(); ++s) row.push_back(rational_to_json(x(v, s)));
        doc[std::to_string(v)] = std::move(row);
    }
    return doc;
}

}  // namespace metembed
