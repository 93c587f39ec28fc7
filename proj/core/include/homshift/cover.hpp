#ifndef HOMSHIFT_COVER_HPP
#define HOMSHIFT_COVER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homshift/graph.hpp"

namespace homshift {

/// Universal cover of a connected base graph, materialised as the tree of
/// non-backtracking walks from a root, possibly truncated at depth_cap.
/// The covering map sends a node to the terminal vertex of its walk.
class CoverTree {
public:
    struct Node {
        Vertex terminal = 0;
        std::int64_t parent = -1;  // -1 for the root
        std::size_t depth = 0;
        std::vector<std::uint32_t> children;
    };

    CoverTree(Graph base, Vertex root, std::size_t depth_cap, bool complete,
              std::vector<Node> nodes)
        : base_(std::move(base)), root_(root), depth_cap_(depth_cap), complete_(complete),
          nodes_(std::move(nodes)) {}

    const Graph& base() const noexcept { return base_; }
    Vertex root() const noexcept { return root_; }
    std::size_t depth_cap() const noexcept { return depth_cap_; }
    /// True iff no node at depth_cap admits a non-backtracking extension,
    /// i.e. the enumeration exhausted the whole cover.
    bool complete() const noexcept { return complete_; }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    const Node& node(std::uint32_t id) const { return nodes_[id]; }
    Vertex terminal(std::uint32_t id) const { return nodes_[id].terminal; }

    /// Reconstructs the walk (root ... terminal) backing a node.
    std::vector<Vertex> walk_of(std::uint32_t id) const;

private:
    Graph base_;
    Vertex root_;
    std::size_t depth_cap_;
    bool complete_;
    std::vector<Node> nodes_;
};

struct CoverFiniteness {
    bool finite = false;
    /// Witness cycle in the non-backtracking arc digraph when infinite:
    /// consecutive arcs (u,v) -> (v,w), closing up.
    std::vector<std::pair<Vertex, Vertex>> arc_cycle;
};

/// Decides finiteness of the universal cover on the arc digraph: arcs are
/// ordered pairs (u, v) with v ~ u; (u,v) steps to (v,w) iff w != u.
/// Finite iff the part reachable from the root's out-arcs is acyclic.
CoverFiniteness decide_cover_finiteness(const Graph& g);
bool is_cover_finite(const Graph& g);

/// Number of arcs (u, v); a cover of a finite-cover graph completes at
/// depth arc_count + 1.
std::size_t arc_count(const Graph& g);

struct CoverLimits {
    std::size_t node_budget = 1'000'000;
};

CoverTree build_cover(const Graph& g, Vertex root, std::size_t depth_cap,
                      const CoverLimits& limits = {});

/// Unique lift of a base walk through the covering map, starting at
/// base_node. Requires a four-cycle hom-free base and terminal(base_node)
/// equal to the walk's first vertex.
std::vector<std::uint32_t> lift_walk(const Graph& g, const CoverTree& cover,
                                     const std::vector<Vertex>& walk, std::uint32_t base_node);

std::string to_dot(const CoverTree& cover);

} // namespace homshift

#endif
