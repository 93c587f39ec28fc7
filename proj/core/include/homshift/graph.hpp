#ifndef HOMSHIFT_GRAPH_HPP
#define HOMSHIFT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homshift {

using Vertex = std::uint32_t;
using AdjacencyList = std::vector<std::vector<Vertex>>;

/// Finite undirected graph with optional self-loops and no isolated
/// vertices. Vertex ids are dense naturals assigned by first appearance
/// in the input; all downstream tie-breaking derives from id order.
///
/// A vertex v is a member of its own neighbour set iff it carries a
/// self-loop, so N(v) already has the closed-neighbourhood reading where
/// it matters (folding).
class Graph {
public:
    Graph() = default;

    /// Build from named edges. Ids follow first appearance; duplicate
    /// edges are collapsed; "u u" records a self-loop.
    static Graph from_edge_list(const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Vertex v) const { return names_[v]; }

    /// Sorted neighbour ids; contains v itself iff v has a self-loop.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const AdjacencyList& adjacency() const noexcept { return adj_; }

    bool adjacent(Vertex u, Vertex v) const;
    bool has_loop(Vertex v) const { return adjacent(v, v); }

    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    std::size_t max_degree() const;
    std::size_t edge_count() const;  // undirected edges; a loop counts once
    std::size_t loop_count() const;

    std::optional<Vertex> find_vertex(std::string_view name) const;
    Vertex vertex(std::string_view name) const;  // throws domain_error if unknown

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> names_;
    AdjacencyList adj_;
};

/// Edge-list text: one edge per line as two whitespace-separated names,
/// '#'-prefixed lines are comments. Errors carry the offending line.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph. For graphs that came out of parse_graph the
/// round trip is the identity on vertex ids.
std::string serialize_graph(const Graph& g);

enum class FixtureFamily { complete, cycle, barbell, hard_square, path, star };

/// Named graph families used throughout the test corpus. k is the vertex
/// count (cycle: cycle length); hard_square ignores k.
Graph fixture(FixtureFamily family, std::size_t k = 0);
std::optional<FixtureFamily> fixture_family_from_name(std::string_view name);

struct BasicAnalysis {
    bool connected = false;
    /// Two-colouring with vertex classes in {0,1}; absent iff the graph
    /// has an odd closed walk (self-loops count as odd cycles).
    std::optional<std::vector<std::uint8_t>> bipartition;
    /// Graph diameter; absent means infinite (disconnected).
    std::optional<std::size_t> diameter;

    bool bipartite() const { return bipartition.has_value(); }
    /// The two-dimensional hom-shift over the graph is transitive iff the
    /// graph is connected, and mixing iff additionally not bipartite.
    bool transitive() const { return connected; }
    bool mixing() const { return connected && !bipartite(); }
};

BasicAnalysis analyze_basic(const Graph& g);

struct ProductResult {
    Graph graph;
    std::vector<std::string> removed_isolated;  // names dropped to keep the no-isolated invariant
};

/// Tensor product: (v1,v2) ~ (w1,w2) iff v1~w1 and v2~w2.
ProductResult tensor_product(const Graph& a, const Graph& b);

/// Cartesian (box) product: adjacent iff equal in one coordinate and
/// adjacent in the other.
ProductResult cartesian_product(const Graph& a, const Graph& b);

/// Induced subgraphs of the connected components, ordered by smallest
/// contained vertex id.
std::vector<Graph> connected_components(const Graph& g);

std::string to_dot(const Graph& g);

// Generic routines shared by Graph and the walk graphs. Adjacency lists
// must be sorted; u in adj[u] encodes a self-loop.
bool adjacency_connected(const AdjacencyList& adj);
std::optional<std::vector<std::uint8_t>> adjacency_bipartition(const AdjacencyList& adj);
std::optional<std::size_t> adjacency_diameter(const AdjacencyList& adj);
std::vector<std::size_t> bfs_distances(const AdjacencyList& adj, Vertex source);

} // namespace homshift

#endif
