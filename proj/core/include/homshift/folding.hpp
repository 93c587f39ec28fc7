#ifndef HOMSHIFT_FOLDING_HPP
#define HOMSHIFT_FOLDING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homshift/graph.hpp"

namespace homshift {

struct FoldStep {
    std::string folded;
    std::string target;
};

/// A run of folds down to a stiff graph. Each step removed `folded`
/// because its neighbourhood was contained in `target`'s.
struct FoldSequence {
    std::vector<FoldStep> steps;
    Graph terminal;
};

enum class FoldPolicy { lexicographic, random };

/// Smallest pair (v, w), v != w, with N(v) contained in N(w); absent if
/// the graph is stiff.
std::optional<std::pair<Vertex, Vertex>> find_fold(const Graph& g);

FoldSequence stiff_reduce(const Graph& g, FoldPolicy policy = FoldPolicy::lexicographic,
                          std::uint64_t seed = 0);

/// Folds down to a single looped vertex. Requires a connected graph.
bool is_dismantlable(const Graph& g);

/// Folds down to a single edge or a single looped vertex. Requires a
/// connected graph.
bool is_bipartite_dismantlable(const Graph& g);

/// Every homomorphic image of the four-cycle degenerates: f(0) = f(2) or
/// f(1) = f(3). Decided by enumerating all candidate maps.
bool is_four_cycle_hom_free(const Graph& g);

/// Structural equivalent: no four-cycle subgraph, and no looped vertex
/// with two non-distinct-from-it neighbours that are adjacent (this also
/// forbids a looped neighbour of a looped vertex).
bool four_cycle_hom_free_structural(const Graph& g);

struct Endomorphism {
    std::vector<Vertex> map;
};

bool is_graph_homomorphism(const Graph& g, const Endomorphism& f);
/// f(v) ~ v for every v.
bool moves_to_neighbor(const Graph& g, const Endomorphism& f);

/// Image chain g, f(g), f(f(g)), ... is decreasing; it stabilises within
/// |V| steps. Returns the stable image set.
std::vector<Vertex> stable_image(const Graph& g, const Endomorphism& f);

enum class SearchStatus { found, exhausted, budget_exceeded };

struct CollapseResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Endomorphism> witness;
    std::size_t nodes_explored = 0;

    bool found() const { return status == SearchStatus::found; }
    bool unknown() const { return status == SearchStatus::budget_exceeded; }
};

struct CollapseSearchLimits {
    std::size_t node_budget = 100000;
};

/// Backtracking search for a homomorphism f with f(v) ~ v whose iterated
/// image collapses to a single edge or a single looped vertex. Requires a
/// connected graph. A blown budget yields `budget_exceeded`, not an error.
CollapseResult find_collapsing_map(const Graph& g, const CollapseSearchLimits& limits = {});

std::string fold_sequence_to_json(const FoldSequence& seq);

} // namespace homshift

#endif
