#include "homshift/cover.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "homshift/errors.hpp"
#include "homshift/folding.hpp"

namespace homshift {

namespace {

void require_connected(const Graph& g, const char* op) {
    if (!adjacency_connected(g.adjacency()))
        throw domain_error(std::string(op) + " requires a connected graph");
}

struct ArcDigraph {
    // arc id -> (u, v); transitions (u,v) -> (v,w) with w != u
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::vector<std::uint32_t>> arcs_from;  // by source vertex

    explicit ArcDigraph(const Graph& g) {
        arcs_from.resize(g.vertex_count());
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            for (Vertex v : g.neighbors(u)) {
                arcs_from[u].push_back(static_cast<std::uint32_t>(arcs.size()));
                arcs.emplace_back(u, v);
            }
        }
        out.resize(arcs.size());
        for (std::uint32_t a = 0; a < arcs.size(); ++a) {
            auto [u, v] = arcs[a];
            for (std::uint32_t b : arcs_from[v]) {
                if (arcs[b].second != u) out[a].push_back(b);
            }
        }
    }
};

} // namespace

std::size_t arc_count(const Graph& g) {
    std::size_t count = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) count += g.neighbors(u).size();
    return count;
}

CoverFiniteness decide_cover_finiteness(const Graph& g) {
    require_connected(g, "decide_cover_finiteness");
    ArcDigraph arcs(g);

    // iterative tricolour DFS from the root's out-arcs
    enum : std::uint8_t { kWhite, kGrey, kBlack };
    std::vector<std::uint8_t> colour(arcs.arcs.size(), kWhite);

    struct Frame {
        std::uint32_t arc;
        std::size_t next = 0;
    };
    for (std::uint32_t start : arcs.arcs_from[0]) {
        if (colour[start] != kWhite) continue;
        std::vector<Frame> stack{{start}};
        colour[start] = kGrey;
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto& succ = arcs.out[frame.arc];
            if (frame.next == succ.size()) {
                colour[frame.arc] = kBlack;
                stack.pop_back();
                continue;
            }
            std::uint32_t next = succ[frame.next++];
            if (colour[next] == kGrey) {
                // recover the cycle from the DFS stack
                CoverFiniteness result;
                result.finite = false;
                std::vector<std::uint32_t> cycle;
                for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                    cycle.push_back(it->arc);
                    if (it->arc == next) break;
                }
                std::reverse(cycle.begin(), cycle.end());
                for (std::uint32_t a : cycle) result.arc_cycle.push_back(arcs.arcs[a]);
                return result;
            }
            if (colour[next] == kWhite) {
                colour[next] = kGrey;
                stack.push_back({next});
            }
        }
    }
    return CoverFiniteness{true, {}};
}

bool is_cover_finite(const Graph& g) { return decide_cover_finiteness(g).finite; }

CoverTree build_cover(const Graph& g, Vertex root, std::size_t depth_cap,
                      const CoverLimits& limits) {
    require_connected(g, "build_cover");
    if (root >= g.vertex_count()) throw domain_error("build_cover: root out of range");

    std::vector<CoverTree::Node> nodes;
    nodes.push_back({root, -1, 0, {}});
    std::deque<std::uint32_t> frontier{0};
    bool complete = true;
    while (!frontier.empty()) {
        std::uint32_t id = frontier.front();
        frontier.pop_front();
        const Vertex t = nodes[id].terminal;
        // previous vertex of the walk; extensions must avoid it
        const bool has_prev = nodes[id].parent >= 0;
        const Vertex prev = has_prev ? nodes[static_cast<std::size_t>(nodes[id].parent)].terminal : 0;
        const std::size_t depth = nodes[id].depth;
        for (Vertex w : g.neighbors(t)) {
            if (has_prev && w == prev) continue;
            if (depth == depth_cap) {
                complete = false;  // an admissible extension exists beyond the cap
                break;
            }
            if (nodes.size() >= limits.node_budget)
                throw resource_error("build_cover: node budget " +
                                     std::to_string(limits.node_budget) + " exceeded");
            std::uint32_t child = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back({w, static_cast<std::int64_t>(id), depth + 1, {}});
            nodes[id].children.push_back(child);
            frontier.push_back(child);
        }
    }
    return CoverTree(g, root, depth_cap, complete, std::move(nodes));
}

std::vector<Vertex> CoverTree::walk_of(std::uint32_t id) const {
    std::vector<Vertex> walk;
    for (std::int64_t cur = id; cur >= 0; cur = nodes_[static_cast<std::size_t>(cur)].parent)
        walk.push_back(nodes_[static_cast<std::size_t>(cur)].terminal);
    std::reverse(walk.begin(), walk.end());
    return walk;
}

std::vector<std::uint32_t> lift_walk(const Graph& g, const CoverTree& cover,
                                     const std::vector<Vertex>& walk, std::uint32_t base_node) {
    if (!is_four_cycle_hom_free(g))
        throw domain_error("lift_walk requires a four-cycle hom-free base graph");
    if (walk.empty()) throw domain_error("lift_walk: empty walk");
    if (base_node >= cover.node_count()) throw domain_error("lift_walk: bad base node");
    if (cover.terminal(base_node) != walk.front())
        throw domain_error("lift_walk: base node terminal does not match the walk start");

    std::vector<std::uint32_t> lift{base_node};
    for (std::size_t i = 1; i < walk.size(); ++i) {
        const std::uint32_t cur = lift.back();
        const auto& node = cover.node(cur);
        if (!g.adjacent(cover.terminal(cur), walk[i]))
            throw domain_error("lift_walk: input is not a walk in the base graph");
        std::int64_t next = -1;
        if (node.parent >= 0 && cover.terminal(static_cast<std::uint32_t>(node.parent)) == walk[i])
            next = node.parent;
        for (std::uint32_t child : node.children)
            if (cover.terminal(child) == walk[i]) next = child;
        if (next < 0) {
            if (node.depth == cover.depth_cap())
                throw resource_error("lift_walk: lift escapes the cover's depth cap");
            throw domain_error("lift_walk: no tree neighbour matches the next vertex");
        }
        lift.push_back(static_cast<std::uint32_t>(next));
    }
    return lift;
}

std::string to_dot(const CoverTree& cover) {
    std::ostringstream out;
    out << "graph cover {\n";
    for (std::uint32_t id = 0; id < cover.node_count(); ++id) {
        out << "  n" << id << " [label=\"" << cover.base().name(cover.terminal(id)) << "\"";
        if (id == 0) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (std::uint32_t id = 1; id < cover.node_count(); ++id)
        out << "  n" << cover.node(id).parent << " -- n" << id << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace homshift
