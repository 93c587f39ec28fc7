#include "homshift/folding.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "homshift/errors.hpp"

namespace homshift {

namespace {

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::pair<Vertex, Vertex>> all_folds(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> folds;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (v != w && subset_of(g.neighbors(v), g.neighbors(w)))
                folds.emplace_back(v, w);
    return folds;
}

Graph remove_vertex(const Graph& g, Vertex victim) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == victim) continue;
        for (Vertex w : g.neighbors(v))
            if (w >= v && w != victim) edges.emplace_back(g.name(v), g.name(w));
    }
    return Graph::from_edge_list(edges);
}

} // namespace

std::optional<std::pair<Vertex, Vertex>> find_fold(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (v != w && subset_of(g.neighbors(v), g.neighbors(w)))
                return std::make_pair(v, w);
    return std::nullopt;
}

FoldSequence stiff_reduce(const Graph& g, FoldPolicy policy, std::uint64_t seed) {
    FoldSequence seq;
    seq.terminal = g;
    std::mt19937_64 rng(seed);
    for (;;) {
        std::pair<Vertex, Vertex> fold;
        if (policy == FoldPolicy::lexicographic) {
            auto found = find_fold(seq.terminal);
            if (!found) break;
            fold = *found;
        } else {
            auto folds = all_folds(seq.terminal);
            if (folds.empty()) break;
            fold = folds[std::uniform_int_distribution<std::size_t>(0, folds.size() - 1)(rng)];
        }
        seq.steps.push_back({seq.terminal.name(fold.first), seq.terminal.name(fold.second)});
        seq.terminal = remove_vertex(seq.terminal, fold.first);
    }
    return seq;
}

namespace {

// Stiff graphs reached from connected inputs are classified by exact
// shape, not by isomorphism search.
bool terminal_is_looped_vertex(const Graph& t) {
    return t.vertex_count() == 1 && t.has_loop(0);
}

bool terminal_is_single_edge(const Graph& t) {
    return t.vertex_count() == 2 && t.edge_count() == 1 && t.loop_count() == 0 && t.adjacent(0, 1);
}

void require_connected(const Graph& g, const char* op) {
    if (!adjacency_connected(g.adjacency()))
        throw domain_error(std::string(op) + " requires a connected graph");
}

} // namespace

bool is_dismantlable(const Graph& g) {
    require_connected(g, "is_dismantlable");
    return terminal_is_looped_vertex(stiff_reduce(g).terminal);
}

bool is_bipartite_dismantlable(const Graph& g) {
    require_connected(g, "is_bipartite_dismantlable");
    const Graph t = stiff_reduce(g).terminal;
    return terminal_is_looped_vertex(t) || terminal_is_single_edge(t);
}

bool is_four_cycle_hom_free(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b : g.neighbors(a))
            for (Vertex c : g.neighbors(b)) {
                if (c == a) continue;  // f(0) == f(2) always degenerates
                for (Vertex d : g.neighbors(c))
                    if (d != b && g.adjacent(d, a)) return false;
            }
    return true;
}

bool four_cycle_hom_free_structural(const Graph& g) {
    const std::size_t n = g.vertex_count();
    // four-cycle subgraph: distinct a, c sharing two distinct neighbours
    // outside {a, c}
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex c = a + 1; c < n; ++c) {
            std::size_t common = 0;
            for (Vertex b : g.neighbors(a))
                if (b != a && b != c && g.adjacent(b, c)) ++common;
            if (common >= 2) return false;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!g.has_loop(v)) continue;
        for (Vertex w1 : g.neighbors(v)) {
            if (w1 == v) continue;
            for (Vertex w2 : g.neighbors(v)) {
                if (w2 == v) continue;
                if (g.adjacent(w1, w2)) return false;  // w1 == w2 catches a looped neighbour
            }
        }
    }
    return true;
}

bool is_graph_homomorphism(const Graph& g, const Endomorphism& f) {
    if (f.map.size() != g.vertex_count()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.neighbors(v))
            if (!g.adjacent(f.map[v], f.map[w])) return false;
    return true;
}

bool moves_to_neighbor(const Graph& g, const Endomorphism& f) {
    if (f.map.size() != g.vertex_count()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!g.adjacent(v, f.map[v])) return false;
    return true;
}

std::vector<Vertex> stable_image(const Graph& g, const Endomorphism& f) {
    std::vector<bool> in_set(g.vertex_count(), true);
    for (std::size_t round = 0; round < g.vertex_count(); ++round) {
        std::vector<bool> next(g.vertex_count(), false);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (in_set[v]) next[f.map[v]] = true;
        if (next == in_set) break;
        in_set = next;
    }
    std::vector<Vertex> image;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (in_set[v]) image.push_back(v);
    return image;
}

namespace {

bool image_collapses(const Graph& g, const Endomorphism& f) {
    auto image = stable_image(g, f);
    if (image.size() == 1) return g.has_loop(image[0]);
    if (image.size() == 2) return g.adjacent(image[0], image[1]);
    return false;
}

struct CollapseSearch {
    const Graph& g;
    std::size_t budget;
    std::size_t nodes = 0;
    bool truncated = false;
    std::vector<Vertex> order;            // assignment order: descending degree
    std::vector<Vertex> assignment;       // by vertex id; sentinel = n
    std::optional<Endomorphism> result;

    explicit CollapseSearch(const Graph& graph, std::size_t node_budget)
        : g(graph), budget(node_budget), assignment(graph.vertex_count(), static_cast<Vertex>(graph.vertex_count())) {
        order.resize(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) > g.degree(b);
        });
    }

    bool consistent(Vertex v, Vertex image) const {
        // hom constraint against everything already assigned; the loop
        // edge (v, v) requires a looped image
        if (g.has_loop(v) && !g.has_loop(image)) return false;
        for (Vertex w : g.neighbors(v)) {
            if (w == v) continue;
            Vertex iw = assignment[w];
            if (iw != g.vertex_count() && !g.adjacent(image, iw)) return false;
        }
        return true;
    }

    bool run(std::size_t depth) {
        if (++nodes > budget) {
            truncated = true;
            return true;  // stop unwinding
        }
        if (depth == order.size()) {
            Endomorphism f{assignment};
            if (image_collapses(g, f)) {
                result = std::move(f);
                return true;
            }
            return false;
        }
        Vertex v = order[depth];
        for (Vertex image : g.neighbors(v)) {
            if (!consistent(v, image)) continue;
            assignment[v] = image;
            if (run(depth + 1)) return true;
            assignment[v] = static_cast<Vertex>(g.vertex_count());
        }
        return false;
    }
};

} // namespace

CollapseResult find_collapsing_map(const Graph& g, const CollapseSearchLimits& limits) {
    require_connected(g, "find_collapsing_map");
    CollapseSearch search(g, limits.node_budget);
    search.run(0);
    CollapseResult result;
    result.nodes_explored = search.nodes;
    if (search.result) {
        result.status = SearchStatus::found;
        result.witness = std::move(search.result);
    } else if (search.truncated) {
        result.status = SearchStatus::budget_exceeded;
    } else {
        result.status = SearchStatus::exhausted;
    }
    return result;
}

std::string fold_sequence_to_json(const FoldSequence& seq) {
    nlohmann::json j;
    j["steps"] = nlohmann::json::array();
    for (const auto& step : seq.steps)
        j["steps"].push_back({step.folded, step.target});
    j["terminal"] = nlohmann::json::array();
    const Graph& t = seq.terminal;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        for (Vertex w : t.neighbors(v))
            if (w >= v) j["terminal"].push_back({t.name(v), t.name(w)});
    return j.dump(2);
}

} // namespace homshift
