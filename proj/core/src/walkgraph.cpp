#include "homshift/walkgraph.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "homshift/cover.hpp"
#include "homshift/errors.hpp"
#include "homshift/folding.hpp"

namespace homshift {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void require_connected(const Graph& g, const char* op) {
    if (!adjacency_connected(g.adjacency()))
        throw domain_error(std::string(op) + " requires a connected graph");
}

// |V| * max_degree^steps, saturating
std::size_t walk_count_estimate(const Graph& g, std::size_t steps) {
    const std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t estimate = g.vertex_count();
    for (std::size_t i = 0; i < steps; ++i) {
        if (g.max_degree() != 0 && estimate > cap / g.max_degree()) return cap;
        estimate *= g.max_degree();
    }
    return estimate;
}

void check_budget(const Graph& g, std::size_t steps, const WalkLimits& limits, const char* op) {
    const std::size_t estimate = walk_count_estimate(g, steps);
    if (estimate > limits.vertex_budget)
        throw resource_error(std::string(op) + ": estimated vertex count " +
                             (estimate == std::numeric_limits<std::size_t>::max()
                                  ? std::string("overflow")
                                  : std::to_string(estimate)) +
                             " exceeds budget " + std::to_string(limits.vertex_budget));
}

struct WalkHash {
    std::size_t operator()(const std::vector<Vertex>& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Vertex v : w) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Walks of length `len` (len+1 vertices), lexicographic; closed walks add
// the wrap edge constraint.
std::vector<std::vector<Vertex>> enumerate_walks(const Graph& g, std::size_t len, bool closed) {
    std::vector<std::vector<Vertex>> walks;
    std::vector<Vertex> current;
    auto extend = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            if (!closed || g.adjacent(current.back(), current.front()))
                walks.push_back(current);
            return;
        }
        for (Vertex w : g.neighbors(current.back())) {
            current.push_back(w);
            self(self, remaining - 1);
            current.pop_back();
        }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        current.assign(1, v);
        if (len == 0) {
            if (!closed || g.adjacent(v, v)) walks.push_back(current);
        } else {
            extend(extend, len);
        }
    }
    return walks;
}

// Pointwise-adjacent neighbours of `walk` among valid walks, generated in
// lexicographic order by pruning on both the pointwise and the
// consecutive-step constraint.
template <typename Wrap>
void pointwise_neighbors(const Graph& g, const std::vector<Vertex>& walk, Wrap&& wrap_ok,
                         std::vector<std::vector<Vertex>>& out) {
    std::vector<Vertex> current;
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == walk.size()) {
            if (wrap_ok(current)) out.push_back(current);
            return;
        }
        for (Vertex w : g.neighbors(walk[i])) {
            if (i > 0 && !g.adjacent(current.back(), w)) continue;
            current.push_back(w);
            self(self, i + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
}

AdjacencyList build_pointwise_adjacency(const Graph& g,
                                        const std::vector<std::vector<Vertex>>& walks,
                                        bool closed) {
    std::unordered_map<std::vector<Vertex>, std::uint32_t, WalkHash> index;
    index.reserve(walks.size() * 2);
    for (std::uint32_t i = 0; i < walks.size(); ++i) index.emplace(walks[i], i);

    AdjacencyList adj(walks.size());
    std::vector<std::vector<Vertex>> nbrs;
    for (std::uint32_t i = 0; i < walks.size(); ++i) {
        nbrs.clear();
        if (closed) {
            pointwise_neighbors(g, walks[i],
                                [&](const std::vector<Vertex>& c) {
                                    return g.adjacent(c.back(), c.front());
                                },
                                nbrs);
        } else {
            pointwise_neighbors(g, walks[i], [](const std::vector<Vertex>&) { return true; }, nbrs);
        }
        adj[i].reserve(nbrs.size());
        for (const auto& nbr : nbrs) adj[i].push_back(index.at(nbr));
        // generated in lexicographic order == ascending id order
    }
    return adj;
}

std::optional<std::size_t> parallel_diameter(const AdjacencyList& adj) {
    if (adj.empty()) return std::nullopt;
    const std::size_t n = adj.size();
    auto eccentricity_range = [&](std::size_t begin, std::size_t end) -> std::optional<std::size_t> {
        std::size_t best = 0;
        for (std::size_t s = begin; s < end; ++s) {
            auto dist = bfs_distances(adj, static_cast<Vertex>(s));
            for (std::size_t d : dist) {
                if (d == kUnreached) return std::nullopt;
                best = std::max(best, d);
            }
        }
        return best;
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
    if (n < 256 || workers <= 1) return eccentricity_range(0, n);

    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::future<std::optional<std::size_t>>> futures;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
        const std::size_t end = std::min(n, begin + chunk);
        futures.push_back(std::async(std::launch::async, eccentricity_range, begin, end));
    }
    std::size_t best = 0;
    bool connected = true;
    for (auto& f : futures) {
        auto local = f.get();
        if (!local) connected = false;
        else best = std::max(best, *local);
    }
    if (!connected) return std::nullopt;
    return best;
}

} // namespace

WalkGraphN build_walk_graph(const Graph& g, std::size_t n, const WalkLimits& limits) {
    check_budget(g, 2 * n, limits, "build_walk_graph");
    WalkGraphN wg;
    wg.base = g;
    wg.n = n;
    wg.walks = enumerate_walks(g, 2 * n, /*closed=*/false);
    wg.adj = build_pointwise_adjacency(g, wg.walks, /*closed=*/false);
    return wg;
}

CyclicWalkGraph build_cyclic_walk_graph(const Graph& g, std::size_t period,
                                        const WalkLimits& limits) {
    if (period == 0) throw domain_error("build_cyclic_walk_graph: period must be positive");
    check_budget(g, period - 1, limits, "build_cyclic_walk_graph");
    CyclicWalkGraph cwg;
    cwg.base = g;
    cwg.period = period;
    cwg.walks = enumerate_walks(g, period - 1, /*closed=*/true);
    cwg.adj = build_pointwise_adjacency(g, cwg.walks, /*closed=*/true);
    return cwg;
}

std::optional<std::size_t> diameter(const Graph& g) { return parallel_diameter(g.adjacency()); }
std::optional<std::size_t> diameter(const WalkGraphN& wg) { return parallel_diameter(wg.adj); }
std::optional<std::size_t> diameter(const CyclicWalkGraph& cwg) { return parallel_diameter(cwg.adj); }

WalkConnectivity connectivity_report(const Graph& g, std::size_t n, const WalkLimits& limits) {
    const WalkGraphN wg = build_walk_graph(g, n, limits);
    WalkConnectivity report;
    report.connected = adjacency_connected(wg.adj);
    report.bipartite = adjacency_bipartition(wg.adj).has_value();
    return report;
}

GrowthProbe growth_probe(const Graph& g, std::size_t n_max, const WalkLimits& limits) {
    require_connected(g, "growth_probe");
    GrowthProbe probe;
    const auto base_diameter = adjacency_diameter(g.adjacency());
    for (std::size_t n = 0; n <= n_max; ++n) {
        const WalkGraphN wg = build_walk_graph(g, n, limits);
        const auto diam = diameter(wg);
        if (!diam)
            throw domain_error("growth_probe: walk graph disconnected for connected base");
        probe.points.push_back({n, *diam});
    }
    probe.nondecreasing = true;
    probe.upper_bound_ok = true;
    for (std::size_t i = 0; i < probe.points.size(); ++i) {
        if (i > 0 && probe.points[i].diameter < probe.points[i - 1].diameter)
            probe.nondecreasing = false;
        if (base_diameter && probe.points[i].diameter > *base_diameter + 2 * probe.points[i].n)
            probe.upper_bound_ok = false;
    }
    if (is_four_cycle_hom_free(g) && !is_cover_finite(g)) {
        bool ok = true;
        for (const auto& p : probe.points)
            if (p.diameter < p.n) ok = false;
        probe.lower_bound_ok = ok;
    }
    return probe;
}

std::string growth_to_csv(const GrowthProbe& probe) {
    std::ostringstream out;
    out << "n,diameter\n";
    for (const auto& p : probe.points) out << p.n << ',' << p.diameter << '\n';
    return out.str();
}

std::string to_dot(const WalkGraphN& wg) {
    if (wg.size() > 500)
        throw domain_error("to_dot: walk graph too large to render (" +
                           std::to_string(wg.size()) + " vertices)");
    std::ostringstream out;
    out << "graph walkgraph {\n";
    for (std::uint32_t i = 0; i < wg.size(); ++i) {
        out << "  w" << i << " [label=\"";
        for (std::size_t j = 0; j < wg.walks[i].size(); ++j) {
            if (j) out << ',';
            out << wg.base.name(wg.walks[i][j]);
        }
        out << "\"];\n";
    }
    for (std::uint32_t i = 0; i < wg.size(); ++i)
        for (std::uint32_t j : wg.adj[i])
            if (j >= i) out << "  w" << i << " -- w" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace homshift
