// Command line front end: classify a graph, run folds, build covers and
// walk graphs, search gluing distances, glue patterns, count rigid
// extensions. Graphs come in as edge-list text files; reports leave as
// JSON so runs are easy to diff.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "homshift/classify.hpp"
#include "homshift/cover.hpp"
#include "homshift/errors.hpp"
#include "homshift/folding.hpp"
#include "homshift/gluing.hpp"
#include "homshift/graph.hpp"
#include "homshift/sofic.hpp"
#include "homshift/walkgraph.hpp"

namespace {

using namespace homshift;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot write file: " + path);
    out << content;
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

std::string infinity_or(std::optional<std::size_t> v) {
    return v ? std::to_string(*v) : std::string("inf");
}

struct CommonArgs {
    std::string graph_file;
    std::string json_file;
    std::string dot_file;
    std::size_t budget = WalkLimits{}.vertex_budget;
    std::uint64_t seed = 0;
    std::size_t max_n = 2;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_max_n = false) {
    cmd->add_option("-g,--graph", args.graph_file, "Edge-list graph file")->required();
    cmd->add_option("--json", args.json_file, "Write a JSON report to this file");
    cmd->add_option("--dot", args.dot_file, "Write a DOT rendering to this file");
    cmd->add_option("--budget", args.budget, "Vertex budget for walk graphs");
    cmd->add_option("--seed", args.seed, "Seed for randomised policies");
    if (with_max_n) cmd->add_option("--max-n", args.max_n, "Search cap (half distance)");
}

void emit_json(const CommonArgs& args, const nlohmann::json& j) {
    if (!args.json_file.empty()) spill(args.json_file, j.dump(2) + "\n");
}

int run_classify(const CommonArgs& args) {
    const Graph g = load_graph(args.graph_file);
    ClassifyLimits limits;
    limits.walk.vertex_budget = args.budget;
    limits.sofic_n_cap = args.max_n;
    limits.seed = args.seed;
    const ClassificationReport report = classify(g, limits);
    const std::string json = report_to_json(report);
    std::cout << json << '\n';
    if (!args.json_file.empty()) spill(args.json_file, json + "\n");
    if (!args.dot_file.empty()) spill(args.dot_file, to_dot(g));
    return 0;
}

int run_fold(const CommonArgs& args, const std::string& policy) {
    const Graph g = load_graph(args.graph_file);
    const FoldPolicy fold_policy =
        policy == "random" ? FoldPolicy::random : FoldPolicy::lexicographic;
    const FoldSequence seq = stiff_reduce(g, fold_policy, args.seed);
    const std::string json = fold_sequence_to_json(seq);
    std::cout << json << '\n';
    if (!args.json_file.empty()) spill(args.json_file, json + "\n");
    if (!args.dot_file.empty()) spill(args.dot_file, to_dot(seq.terminal));
    return 0;
}

int run_cover(const CommonArgs& args, const std::string& root_name, std::optional<std::size_t> depth) {
    const Graph g = load_graph(args.graph_file);
    const Vertex root = root_name.empty() ? 0 : g.vertex(root_name);
    const CoverFiniteness finiteness = decide_cover_finiteness(g);

    nlohmann::json j;
    j["finite"] = finiteness.finite;
    if (!finiteness.finite) {
        std::cout << "infinite\n";
        std::cout << "arc cycle:";
        j["arc_cycle"] = nlohmann::json::array();
        for (const auto& [u, v] : finiteness.arc_cycle) {
            std::cout << " (" << g.name(u) << "," << g.name(v) << ")";
            j["arc_cycle"].push_back({g.name(u), g.name(v)});
        }
        std::cout << '\n';
    } else {
        std::cout << "finite\n";
    }

    if (finiteness.finite || depth) {
        const std::size_t cap = depth ? *depth : arc_count(g) + 1;
        const CoverTree cover = build_cover(g, root, cap);
        std::cout << "nodes: " << cover.node_count()
                  << (cover.complete() ? " (complete)" : " (truncated)") << '\n';
        j["nodes"] = cover.node_count();
        j["complete"] = cover.complete();
        j["root"] = g.name(root);
        if (!args.dot_file.empty()) spill(args.dot_file, to_dot(cover));
    }
    emit_json(args, j);
    return 0;
}

int run_walk_diam(const CommonArgs& args, std::size_t n) {
    const Graph g = load_graph(args.graph_file);
    const WalkGraphN wg = build_walk_graph(g, n, {args.budget});
    const auto diam = diameter(wg);
    std::cout << infinity_or(diam) << '\n';
    nlohmann::json j;
    j["n"] = n;
    j["vertices"] = wg.size();
    j["diameter"] = diam ? nlohmann::json(*diam) : nlohmann::json("inf");
    emit_json(args, j);
    if (!args.dot_file.empty()) spill(args.dot_file, to_dot(wg));
    return 0;
}

int run_growth(const CommonArgs& args, const std::string& csv_file) {
    const Graph g = load_graph(args.graph_file);
    const GrowthProbe probe = growth_probe(g, args.max_n, {args.budget});
    std::cout << growth_to_csv(probe);
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : probe.points) j["points"].push_back({{"n", p.n}, {"diameter", p.diameter}});
    j["nondecreasing"] = probe.nondecreasing;
    j["upper_bound_ok"] = probe.upper_bound_ok;
    j["lower_bound_ok"] =
        probe.lower_bound_ok ? nlohmann::json(*probe.lower_bound_ok) : nlohmann::json(nullptr);
    emit_json(args, j);
    if (!csv_file.empty()) spill(csv_file, growth_to_csv(probe));
    return 0;
}

int run_gluing_distance(const CommonArgs& args) {
    const Graph g = load_graph(args.graph_file);
    const auto search = minimal_gluing_distance(g, args.max_n, {args.budget});
    nlohmann::json j;
    j["cap"] = 2 * args.max_n;
    if (search.distance()) {
        std::cout << "distance " << *search.distance() << '\n';
        j["distance"] = *search.distance();
    } else {
        std::cout << "none found up to distance " << 2 * args.max_n
                  << " (absence is not a proof)\n";
        j["distance"] = nullptr;
    }
    emit_json(args, j);
    return 0;
}

int run_glue(const CommonArgs& args, const std::string& a_file, const std::string& b_file,
             std::size_t separation, const std::string& text_file) {
    const Graph g = load_graph(args.graph_file);
    const RectPattern a = rect_pattern_from_json(g, slurp(a_file));
    const RectPattern b = rect_pattern_from_json(g, slurp(b_file));
    const auto glued = glue_rect(g, a, b, separation, {args.budget});
    nlohmann::json j;
    if (!glued) {
        std::cout << "not found (no proof of impossibility)\n";
        j["found"] = false;
        emit_json(args, j);
        return 0;
    }
    std::cout << "phase " << (glued->phase == GluePhase::zero ? "0" : "e1") << ", strip "
              << glued->strip.width << "x" << glued->strip.height << '\n';
    j["found"] = true;
    j["phase"] = glued->phase == GluePhase::zero ? "0" : "e1";
    j["b_row"] = glued->b_row;
    j["strip"] = nlohmann::json::parse(rect_pattern_to_json(g, glued->strip));
    emit_json(args, j);
    if (!text_file.empty()) spill(text_file, rect_pattern_to_text(g, glued->strip));
    return 0;
}

int run_extensions(const CommonArgs& args, const std::string& boundary_file,
                   std::optional<std::size_t> n_flag) {
    const Graph g = load_graph(args.graph_file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(slurp(boundary_file));
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("boundary JSON: ") + e.what());
    }
    if (!j.contains("bottom") || !j.contains("right"))
        throw parse_error("boundary JSON needs 'bottom' and 'right' name arrays");
    LBoundary boundary;
    for (const auto& name : j["bottom"]) boundary.bottom.push_back(g.vertex(name.get<std::string>()));
    for (const auto& name : j["right"]) boundary.right.push_back(g.vertex(name.get<std::string>()));
    if (boundary.bottom.empty()) throw parse_error("boundary JSON: empty bottom row");
    boundary.n = boundary.bottom.size() - 1;
    if (n_flag && *n_flag != boundary.n)
        throw domain_error("-n disagrees with the boundary arrays");
    const std::uint64_t count = count_extensions(g, boundary);
    std::cout << count << '\n';
    nlohmann::json out;
    out["n"] = boundary.n;
    out["extensions"] = count;
    emit_json(args, out);
    return 0;
}

int error_out(const char* type, const std::string& message, int code) {
    nlohmann::json j;
    j["error"] = {{"type", type}, {"message", message}};
    std::cerr << j.dump() << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixing-property analysis of hom-shifts over finite graphs"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* classify_cmd = app.add_subcommand("classify", "Full classification report");
    add_common(classify_cmd, args, /*with_max_n=*/true);

    auto* fold_cmd = app.add_subcommand("fold", "Fold the graph down to a stiff graph");
    std::string policy = "lex";
    add_common(fold_cmd, args);
    fold_cmd->add_option("--policy", policy, "Fold order: lex or random")
        ->check(CLI::IsMember({"lex", "random"}));

    auto* cover_cmd = app.add_subcommand("cover", "Universal cover finiteness / construction");
    std::string root_name;
    std::optional<std::size_t> depth;
    add_common(cover_cmd, args);
    cover_cmd->add_option("--root", root_name, "Root vertex name (default: first vertex)");
    cover_cmd->add_option("--depth", depth, "Depth cap for the cover tree");

    auto* walk_cmd = app.add_subcommand("walk-diam", "Diameter of the window-walk graph");
    std::size_t walk_n = 1;
    add_common(walk_cmd, args);
    walk_cmd->add_option("-n", walk_n, "Window half-width")->required();

    auto* growth_cmd = app.add_subcommand("growth", "Walk-graph diameter growth probe");
    std::string csv_file;
    add_common(growth_cmd, args, /*with_max_n=*/true);
    growth_cmd->add_option("--csv", csv_file, "Write CSV to this file");

    auto* dist_cmd = app.add_subcommand("gluing-distance", "Smallest even gluing distance");
    add_common(dist_cmd, args, /*with_max_n=*/true);

    auto* glue_cmd = app.add_subcommand("glue", "Glue two rectangular patterns");
    std::string a_file, b_file, text_file;
    std::size_t separation = 1;
    add_common(glue_cmd, args);
    glue_cmd->add_option("--a", a_file, "First pattern (JSON)")->required();
    glue_cmd->add_option("--b", b_file, "Second pattern (JSON)")->required();
    glue_cmd->add_option("--separation", separation, "Vertical separation")->required();
    glue_cmd->add_option("--text", text_file, "Write the strip as a text grid");

    auto* ext_cmd = app.add_subcommand("extensions", "Count extensions of an L-shaped boundary");
    std::string boundary_file;
    std::optional<std::size_t> ext_n;
    add_common(ext_cmd, args);
    ext_cmd->add_option("--boundary", boundary_file, "Boundary values (JSON)")->required();
    ext_cmd->add_option("-n", ext_n, "Square size (cross-checked against the boundary)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return run_classify(args);
        if (fold_cmd->parsed()) return run_fold(args, policy);
        if (cover_cmd->parsed()) return run_cover(args, root_name, depth);
        if (walk_cmd->parsed()) return run_walk_diam(args, walk_n);
        if (growth_cmd->parsed()) return run_growth(args, csv_file);
        if (dist_cmd->parsed()) return run_gluing_distance(args);
        if (glue_cmd->parsed()) return run_glue(args, a_file, b_file, separation, text_file);
        if (ext_cmd->parsed()) return run_extensions(args, boundary_file, ext_n);
    } catch (const parse_error& e) {
        return error_out("parse", e.what(), 3);
    } catch (const resource_error& e) {
        return error_out("resource", e.what(), 2);
    } catch (const domain_error& e) {
        return error_out("domain", e.what(), 1);
    } catch (const std::exception& e) {
        return error_out("internal", e.what(), 1);
    }
    return 0;
}
