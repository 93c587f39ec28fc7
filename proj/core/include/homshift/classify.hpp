#ifndef HOMSHIFT_CLASSIFY_HPP
#define HOMSHIFT_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homshift/folding.hpp"
#include "homshift/graph.hpp"
#include "homshift/sofic.hpp"
#include "homshift/walkgraph.hpp"

namespace homshift {

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

/// A yes/no verdict always names the fact it came from.
struct Judgement {
    Verdict verdict = Verdict::unknown;
    std::string reason;
};

struct ClassifyLimits {
    WalkLimits walk;
    SubsetLimits subset;
    CollapseSearchLimits collapse;
    std::size_t sofic_n_cap = 2;  // gluing-distance search tries n = 0..cap
    std::uint64_t seed = 0;
};

struct ClassificationReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t loop_count = 0;

    bool connected = false;
    bool bipartite = false;
    bool transitive = false;
    bool mixing = false;

    std::optional<bool> four_cycle_hom_free;
    std::optional<bool> dismantlable;
    std::optional<bool> bipartite_dismantlable;
    std::optional<bool> cover_finite;
    Judgement collapsible;

    Judgement phased_si;
    Judgement phased_block_gluing;
    Judgement block_gluing;           // unphased
    Judgement strong_irreducibility;  // unphased

    /// Found smallest even gluing distance, if the search reached one.
    std::optional<std::size_t> gluing_distance;
    std::size_t gluing_distance_cap = 0;
    std::string gluing_distance_note;

    /// Claim log: one entry per decided verdict.
    std::vector<std::pair<std::string, std::string>> provenance;
};

/// Decision ladder over the structural facts: connectivity and
/// bipartiteness settle transitivity/mixing; bipartite-dismantlability
/// settles phased strong irreducibility; four-cycle hom-free graphs get a
/// definitive phased verdict cross-checked against cover finiteness;
/// otherwise a collapsing map or the even-distance search may still
/// settle phased block-gluing. Everything left is reported unknown.
ClassificationReport classify(const Graph& g, const ClassifyLimits& limits = {});

/// Versioned JSON rendering ("schema": 1); key order is deterministic.
std::string report_to_json(const ClassificationReport& report);

/// Internal consistency (mixing implies transitive, phased SI implies
/// phased block-gluing, provenance coverage, ...). Throws on violation;
/// classify runs this before returning.
void validate_report(const ClassificationReport& report);

} // namespace homshift

#endif
