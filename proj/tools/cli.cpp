#include "cli.hpp"

#include "metembed/certificates.hpp"
#include "metembed/cutcone.hpp"
#include "metembed/errors.hpp"
#include "metembed/io.hpp"
#include "metembed/l1_embedding.hpp"
#include "metembed/support_embedding.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace metembed::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

// Input documents plus everything needed to write the run manifest.
class Session {
public:
    Session(std::vector<std::string> args, std::ostream& out)
        : args_(std::move(args)), out_(out), start_(std::chrono::steady_clock::now()) {}

    std::string load(const std::string& path) {
        std::string data = read_file(path);
        inputs_.push_back({{"path", path}, {"sha256", sha256_hex(data)}});
        return data;
    }

    /// Writes `text` to `path`, or to the output stream when path is empty.
    void emit(const std::string& path, const std::string& text) {
        if (path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw ValidationError("cannot write '" + path + "'");
        file << text;
        written_.push_back(path);
    }

    void emit_json(const std::string& path, Json doc) {
        if (!path.empty()) doc["manifest"] = manifest_name(path);
        emit(path, doc.dump(2) + "\n");
    }

    void set_seed(std::uint64_t seed) { seed_ = seed; }

    /// One sidecar per output file; outputs only reference it, so identical
    /// invocations produce byte-identical outputs.
    void write_manifests() {
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        for (const auto& path : written_) {
            Json m;
            m["tool"] = "metembed";
            m["version"] = kToolVersion;
            m["command_line"] = args_;
            m["inputs"] = inputs_;
            m["output"] = fs::path(path).filename().string();
            m["seed"] = seed_ ? Json(*seed_) : Json(nullptr);
            m["wall_time_seconds"] = wall;
            std::ofstream(manifest_path(path), std::ios::binary) << m.dump(2) << "\n";
        }
    }

    static std::string manifest_path(const std::string& path) { return path + ".manifest.json"; }
    static std::string manifest_name(const std::string& path) {
        return fs::path(manifest_path(path)).filename().string();
    }

private:
    std::vector<std::string> args_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_;
    Json inputs_ = Json::array();
    std::vector<std::string> written_;
    std::optional<std::uint64_t> seed_;
};

struct Loaded {
    std::optional<LevelGraph> graph;
    DistanceMatrix metric;
};

// A graph JSON document, or a metric table when the file ends in .csv.
Loaded load_input(Session& session, const std::string& path) {
    const std::string text = session.load(path);
    Loaded in;
    if (fs::path(path).extension() == ".csv") {
        in.metric = metric_from_csv(text);
        return in;
    }
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
    in.graph = graph_from_json(doc);
    in.metric = shortest_path_metric(*in.graph);
    return in;
}

std::string derived_path(const std::string& out, const std::string& suffix) {
    if (out.empty()) return {};
    fs::path p(out);
    return (p.parent_path() / (p.stem().string() + suffix)).string();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laakso and diamond graph embedding workbench"};
    app.require_subcommand(1);

    std::string out_path, format_name = "json";
    int threads = 1;
    std::uint64_t seed = 1;
    bool allow_large = false;
    app.add_option("--out", out_path, "Output file (default: standard output)");
    app.add_option("--format", format_name, "json, dot or csv-metric");
    app.add_option("--threads", threads, "Worker threads for pair scans and search")
        ->check(CLI::Range(1, 256));
    app.add_option("--seed", seed, "Seed for the local certificate search");
    app.add_flag("--allow-large", allow_large, "Permit level 4 for the L1 embedding");

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "Build a Laakso or diamond graph")->fallthrough();
    std::string family_name_arg;
    int level = 0;
    graph_cmd->add_option("--family", family_name_arg, "laakso or diamond")->required();
    graph_cmd->add_option("--level", level, "Recursion level")->required();

    // export
    auto* export_cmd = app.add_subcommand("export", "Convert a graph document")->fallthrough();
    std::string export_input;
    export_cmd->add_option("graph", export_input, "Graph JSON")->required();

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "Build and verify an embedding")->fallthrough();
    std::string embed_input, method = "l1", report_path;
    embed_cmd->add_option("graph", embed_input, "Graph JSON")->required();
    embed_cmd->add_option("--method", method, "support or l1")
        ->check(CLI::IsMember({"support", "l1"}));
    embed_cmd->add_option("--report", report_path, "Report file (default: <out>.report.json)");

    // certificate
    auto* cert_cmd = app.add_subcommand("certificate", "Lower-bound certificates")->fallthrough();
    cert_cmd->require_subcommand(1);
    auto* verify_cmd = cert_cmd->add_subcommand("verify", "Evaluate a weight vector")->fallthrough();
    std::string verify_input, weights_arg;
    verify_cmd->add_option("input", verify_input, "Graph JSON or metric CSV")->required();
    verify_cmd->add_option("--weights", weights_arg, "Weight JSON, or 'paper' for the built-in systems")
        ->required();
    auto* search_cmd = cert_cmd->add_subcommand("search", "Search weight vectors")->fallthrough();
    std::string search_input, strategy = "exhaustive", start_arg;
    int range = 1;
    std::uint64_t budget = 1'000'000, limit = 1'000'000'000;
    search_cmd->add_option("input", search_input, "Graph JSON or metric CSV")->required();
    search_cmd->add_option("--strategy", strategy, "exhaustive or local")
        ->check(CLI::IsMember({"exhaustive", "local"}));
    search_cmd->add_option("--range", range, "Weights range over [-r, r]")->check(CLI::Range(1, 1000));
    search_cmd->add_option("--budget", budget, "Evaluation limit for local search");
    search_cmd->add_option("--limit", limit, "Largest exhaustive space after pruning");
    search_cmd->add_option("--start", start_arg, "Local start: weight JSON or 'paper'");

    // cutcone
    auto* cut_cmd = app.add_subcommand("cutcone", "Exact minimum L1 distortion")->fallthrough();
    std::string cut_input, embedding_path;
    int root = 0;
    cut_cmd->add_option("input", cut_input, "Graph JSON or metric CSV")->required();
    cut_cmd->add_option("--root", root, "Vertex excluded from stored cut sides");
    cut_cmd->add_option("--embedding", embedding_path,
                        "Witness embedding file (default: <out>.embedding.json)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << "\n";
        return validation;
    }

    Session session(args, out);
    try {
        if (graph_cmd->parsed()) {
            auto g = build_graph(parse_family(family_name_arg), level);
            const auto format = parse_graph_format(format_name);
            if (format == GraphFormat::json)
                session.emit_json(out_path, graph_to_json(g));
            else
                session.emit(out_path, export_graph(g, format));
        } else if (export_cmd->parsed()) {
            auto in = load_input(session, export_input);
            const auto format = parse_graph_format(format_name);
            if (format == GraphFormat::json)
                session.emit_json(out_path, graph_to_json(*in.graph));
            else
                session.emit(out_path, export_graph(*in.graph, format));
        } else if (embed_cmd->parsed()) {
            auto in = load_input(session, embed_input);
            if (!in.graph) throw ValidationError("embed needs a graph document");
            Json embedding, report;
            if (method == "support") {
                auto emb = support_embed(*in.graph);
                report = report_to_json(verify_support_distortion(in.metric, emb, threads));
                embedding = support_embedding_to_json(emb);
            } else {
                L1Options opts;
                if (allow_large) opts.max_level = 4;
                auto emb = l1_embed(*in.graph, opts);
                report = report_to_json(verify_l1_distortion(in.metric, emb, threads));
                embedding = interval_embedding_to_json(emb);
            }
            report["method"] = method;
            report["level"] = in.graph->level();
            if (out_path.empty()) {
                session.emit_json("", {{"embedding", embedding}, {"report", report}});
            } else {
                session.emit_json(out_path, embedding);
                session.emit_json(report_path.empty() ? derived_path(out_path, ".report.json")
                                                      : report_path,
                                  report);
            }
        } else if (verify_cmd->parsed()) {
            auto in = load_input(session, verify_input);
            Eigen::VectorXi k;
            if (weights_arg == "paper") {
                if (!in.graph) throw ValidationError("--weights paper needs a graph document");
                k = in.graph->family() == Family::laakso ? paper_weights_L2(*in.graph).weights()
                                                         : paper_weights_D2(*in.graph).weights();
            } else {
                k = weights_from_json(Json::parse(session.load(weights_arg)), in.metric.rows());
            }
            auto cert = verify_certificate(in.metric, WeightAssignment(k));
            session.emit_json(out_path, certificate_to_json(cert));
            if (!cert.bound) err << "note: no bound, the weights have no opposite-sign pair\n";
        } else if (search_cmd->parsed()) {
            auto in = load_input(session, search_input);
            SearchOptions opts;
            opts.strategy = strategy == "local" ? SearchStrategy::local : SearchStrategy::exhaustive;
            opts.lo = -range;
            opts.hi = range;
            opts.budget = budget;
            opts.exhaustive_limit = limit;
            opts.seed = seed;
            opts.threads = threads;
            if (!start_arg.empty()) {
                if (start_arg == "paper") {
                    if (!in.graph) throw ValidationError("--start paper needs a graph document");
                    opts.start = in.graph->family() == Family::laakso
                                     ? paper_weights_L2(*in.graph).weights()
                                     : paper_weights_D2(*in.graph).weights();
                } else {
                    opts.start = weights_from_json(Json::parse(session.load(start_arg)),
                                                   in.metric.rows());
                }
            }
            if (opts.strategy == SearchStrategy::local) session.set_seed(seed);
            session.emit_json(out_path, search_result_to_json(search_certificates(in.metric, opts)));
        } else if (cut_cmd->parsed()) {
            auto in = load_input(session, cut_input);
            CutConeOptions opts;
            opts.root = root;
            auto result = solve_min_distortion(in.metric, opts);
            auto coords = extract_embedding(result.measure, in.metric);
            auto achieved = embedding_distortion(coords, in.metric);
            if (achieved.distortion() != result.c)
                throw StructuralError("extracted embedding has distortion " +
                                      to_string(achieved.distortion()) + ", expected " +
                                      to_string(result.c));
            Json doc = min_distortion_to_json(result);
            if (out_path.empty()) {
                session.emit_json("", {{"result", doc}, {"embedding", coordinates_to_json(coords)}});
            } else {
                session.emit_json(out_path, doc);
                session.emit_json(embedding_path.empty()
                                      ? derived_path(out_path, ".embedding.json")
                                      : embedding_path,
                                  coordinates_to_json(coords));
            }
        }
        session.write_manifests();
        return ok;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return capacity;
    } catch (const CounterexampleError& e) {
        err << "counterexample: " << e.what() << "\n";
        return internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
}

}  // namespace metembed::cli
