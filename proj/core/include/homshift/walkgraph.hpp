#ifndef HOMSHIFT_WALKGRAPH_HPP
#define HOMSHIFT_WALKGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homshift/graph.hpp"

namespace homshift {

/// Graph on the walks of length 2n in the base graph (windows [-n, n],
/// stored as 2n+1 vertices), adjacent iff pointwise adjacent in the base.
/// For n = 0 this is the base graph itself. Walks are listed in
/// lexicographic order, so walk ids are order-compatible with sequences.
struct WalkGraphN {
    Graph base;
    std::size_t n = 0;
    std::vector<std::vector<Vertex>> walks;
    AdjacencyList adj;  // sorted; contains the walk itself iff pointwise self-adjacent

    std::size_t size() const noexcept { return walks.size(); }
};

/// Graph on the closed walks of a fixed period (homomorphisms from the
/// cycle of that length), adjacent iff pointwise adjacent.
struct CyclicWalkGraph {
    Graph base;
    std::size_t period = 0;
    std::vector<std::vector<Vertex>> walks;
    AdjacencyList adj;

    std::size_t size() const noexcept { return walks.size(); }
};

struct WalkLimits {
    std::size_t vertex_budget = 200'000;
};

WalkGraphN build_walk_graph(const Graph& g, std::size_t n, const WalkLimits& limits = {});
CyclicWalkGraph build_cyclic_walk_graph(const Graph& g, std::size_t period,
                                        const WalkLimits& limits = {});

/// All-pairs eccentricity via BFS from every vertex; absent = infinite
/// (disconnected input).
std::optional<std::size_t> diameter(const Graph& g);
std::optional<std::size_t> diameter(const WalkGraphN& wg);
std::optional<std::size_t> diameter(const CyclicWalkGraph& cwg);

struct WalkConnectivity {
    bool connected = false;
    bool bipartite = false;
};

WalkConnectivity connectivity_report(const Graph& g, std::size_t n, const WalkLimits& limits = {});

struct GrowthPoint {
    std::size_t n = 0;
    std::size_t diameter = 0;
};

struct GrowthProbe {
    std::vector<GrowthPoint> points;
    bool nondecreasing = false;
    /// diameter(n) <= diam(base) + 2n for every recorded n.
    bool upper_bound_ok = false;
    /// diameter(n) >= n; only checked (present) when the base is
    /// four-cycle hom-free with an infinite universal cover.
    std::optional<bool> lower_bound_ok;
};

GrowthProbe growth_probe(const Graph& g, std::size_t n_max, const WalkLimits& limits = {});

std::string growth_to_csv(const GrowthProbe& probe);
/// Walk graphs render to DOT only while small (at most 500 vertices).
std::string to_dot(const WalkGraphN& wg);

} // namespace homshift

#endif
