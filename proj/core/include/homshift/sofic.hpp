#ifndef HOMSHIFT_SOFIC_HPP
#define HOMSHIFT_SOFIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homshift/graph.hpp"
#include "homshift/walkgraph.hpp"

namespace homshift {

/// Edge label: a (top, bottom) pair of base-graph vertices. Both
/// presentations label a transition with the target state's pair, so the
/// shared one-step shift cancels in comparisons.
using SoficLabel = std::pair<Vertex, Vertex>;

struct SoficTransition {
    std::uint32_t from = 0;
    SoficLabel label{};
    std::uint32_t to = 0;

    auto operator<=>(const SoficTransition&) const = default;
};

/// Edge-labelled directed graph presenting a one-dimensional sofic shift.
struct LabeledAutomaton {
    std::vector<std::string> states;
    std::vector<std::string> vertex_names;        // base-graph names backing the labels
    std::vector<SoficTransition> transitions;     // sorted by (from, label, to)
    bool essential = false;

    std::size_t state_count() const noexcept { return states.size(); }
};

/// Presentation of the shift of (top, bottom) line pairs read off the
/// window-walk shift at half-width n: states are walks of length 2n,
/// transitions follow pointwise adjacency, labels carry the target walk's
/// endpoints.
LabeledAutomaton build_image_presentation(const Graph& g, std::size_t n,
                                          const WalkLimits& limits = {});

/// Presentation of the pair shift whose origins are joined by an
/// even-length walk: all vertex pairs when the base is not bipartite,
/// same-class pairs when it is. Requires a connected base.
LabeledAutomaton build_tb_presentation(const Graph& g);

/// Trims states without incoming or outgoing transitions until every
/// state lies on a bi-infinite path. The empty automaton is legal.
LabeledAutomaton essentialize(LabeledAutomaton a);

struct SubsetLimits {
    std::size_t pair_budget = 1'000'000;
};

struct ContainsResult {
    bool contained = false;
    /// Shortest label word realised by `a` but not by `b`; empty iff
    /// contained.
    std::vector<SoficLabel> witness;
};

/// Decides factor-language containment L(a) <= L(b) for essential
/// presentations by exploring (a-state, b-state-subset) pairs.
ContainsResult contains(const LabeledAutomaton& a, const LabeledAutomaton& b,
                        const SubsetLimits& limits = {});

struct BlockGluingAt {
    bool gluing = false;
    std::vector<SoficLabel> witness;  // pair word outside the image when not gluing
};

/// Phased block-gluing at distance 2n holds iff the pair shift is
/// contained in the image presentation's language.
BlockGluingAt block_gluing_at(const Graph& g, std::size_t n, const WalkLimits& walk_limits = {},
                              const SubsetLimits& subset_limits = {});

struct GluingDistanceSearch {
    std::optional<std::size_t> half_distance;  // smallest n with gluing at 2n
    std::size_t n_cap = 0;
    /// When nothing was found: the witness word from the n_cap attempt.
    std::vector<SoficLabel> cap_witness;

    std::optional<std::size_t> distance() const {
        if (half_distance) return 2 * *half_distance;
        return std::nullopt;
    }
};

/// Smallest even gluing distance 2n with n <= n_cap; absence is a search
/// outcome, not a proof.
GluingDistanceSearch minimal_gluing_distance(const Graph& g, std::size_t n_cap,
                                             const WalkLimits& walk_limits = {},
                                             const SubsetLimits& subset_limits = {});

std::string automaton_to_json(const LabeledAutomaton& a);
std::string format_label_word(const LabeledAutomaton& a, const std::vector<SoficLabel>& word);

} // namespace homshift

#endif
