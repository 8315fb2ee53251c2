#pragma once

#include "metembed/certificates.hpp"
#include "metembed/cutcone.hpp"
#include "metembed/distortion.hpp"
#include "metembed/graph.hpp"
#include "metembed/l1_embedding.hpp"
#include "metembed/metric.hpp"
#include "metembed/rational.hpp"
#include "metembed/support_embedding.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace metembed {

using Json = nlohmann::ordered_json;

enum class GraphFormat { json, dot, csv_metric };

GraphFormat parse_graph_format(std::string_view s);

/// JSON and DOT describe the graph; csv-metric writes its shortest-path table.
std::string export_graph(const LevelGraph& g, GraphFormat format);

Json graph_to_json(const LevelGraph& g);

/// Rebuilds the family/level named by the document and checks that its
/// vertices, edges and anchors match. Unknown keys are ignored.
LevelGraph graph_from_json(const Json& doc);

/// Header row of ids 0..n-1, then one row of integers per vertex.
std::string metric_to_csv(const DistanceMatrix& d);
DistanceMatrix metric_from_csv(std::string_view text);

/// {"num": p, "den": q}; components outside int64 are written as strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json report_to_json(const DistortionReport& r);
Json support_embedding_to_json(const SupportEmbedding& e);
Json interval_embedding_to_json(const IntervalEmbedding& e);

/// {"weights": {"<id>": k, ...}}; ids not listed get weight 0.
Json weights_to_json(const Eigen::VectorXi& k);
Eigen::VectorXi weights_from_json(const Json& doc, Eigen::Index points);

Json certificate_to_json(const Certificate& c);
Json search_result_to_json(const SearchResult& r);

Json min_distortion_to_json(const MinDistortion& m);
Json coordinates_to_json(const Coordinates& x);

}  // namespace metembed
