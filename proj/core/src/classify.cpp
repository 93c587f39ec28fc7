#include "homshift/classify.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "homshift/cover.hpp"
#include "homshift/errors.hpp"

namespace homshift {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
    }
}

namespace {

void decide(ClassificationReport& report, Judgement& slot, const std::string& claim,
            Verdict verdict, const std::string& reason) {
    if (slot.verdict != Verdict::unknown) return;  // first decision wins
    slot.verdict = verdict;
    slot.reason = reason;
    report.provenance.emplace_back(claim + "=" + to_string(verdict), reason);
}

} // namespace

ClassificationReport classify(const Graph& g, const ClassifyLimits& limits) {
    ClassificationReport report;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.loop_count = g.loop_count();
    report.gluing_distance_cap = 2 * limits.sofic_n_cap;

    const BasicAnalysis basic = analyze_basic(g);
    report.connected = basic.connected;
    report.bipartite = basic.bipartite();
    report.transitive = basic.transitive();
    report.mixing = basic.mixing();

    if (!report.connected) {
        // patterns from distinct components never coexist
        decide(report, report.phased_si, "phased_si", Verdict::no, "disconnected-graph");
        decide(report, report.phased_block_gluing, "phased_block_gluing", Verdict::no,
               "disconnected-graph");
        decide(report, report.block_gluing, "block_gluing", Verdict::no, "disconnected-graph");
        decide(report, report.strong_irreducibility, "strong_irreducibility", Verdict::no,
               "disconnected-graph");
        validate_report(report);
        return report;
    }

    report.dismantlable = is_dismantlable(g);
    report.bipartite_dismantlable = is_bipartite_dismantlable(g);
    report.four_cycle_hom_free = is_four_cycle_hom_free(g);
    report.cover_finite = is_cover_finite(g);

    if (*report.bipartite_dismantlable) {
        decide(report, report.phased_si, "phased_si", Verdict::yes, "bipartite-dismantlable");
        decide(report, report.phased_block_gluing, "phased_block_gluing", Verdict::yes,
               "phased-si-implies-phased-block-gluing");
    }

    if (*report.four_cycle_hom_free) {
        const Verdict verdict = *report.bipartite_dismantlable ? Verdict::yes : Verdict::no;
        decide(report, report.phased_si, "phased_si", verdict,
               "four-cycle-hom-free-characterisation");
        decide(report, report.phased_block_gluing, "phased_block_gluing", verdict,
               "four-cycle-hom-free-characterisation");
        // independent route: finite cover iff finite walk-graph diameter
        if (*report.cover_finite != *report.bipartite_dismantlable)
            throw std::logic_error(
                "cover finiteness contradicts the fold characterisation on a "
                "four-cycle hom-free graph");
    } else {
        const CollapseResult collapse = find_collapsing_map(g, limits.collapse);
        switch (collapse.status) {
        case SearchStatus::found:
            decide(report, report.collapsible, "collapsible", Verdict::yes,
                   "collapsing-map-witness");
            decide(report, report.phased_block_gluing, "phased_block_gluing", Verdict::yes,
                   "collapsing-map");
            break;
        case SearchStatus::exhausted:
            decide(report, report.collapsible, "collapsible", Verdict::no,
                   "collapse-search-exhausted");
            break;
        case SearchStatus::budget_exceeded:
            report.collapsible.reason = "collapse-search-budget";
            break;
        }
    }

    if (report.phased_block_gluing.verdict == Verdict::no) {
        report.gluing_distance_note = "not phased block-gluing (four-cycle hom-free, not "
                                      "bipartite-dismantlable); no distance exists";
    } else {
        try {
            const auto search =
                minimal_gluing_distance(g, limits.sofic_n_cap, limits.walk, limits.subset);
            report.gluing_distance = search.distance();
            if (report.gluing_distance) {
                decide(report, report.phased_block_gluing, "phased_block_gluing", Verdict::yes,
                       "even-distance-search");
            } else {
                report.gluing_distance_note =
                    "no even distance <= " + std::to_string(2 * limits.sofic_n_cap) +
                    " found (cap reached; absence is not a proof)";
            }
        } catch (const resource_error& e) {
            report.gluing_distance_note = std::string("search stopped: ") + e.what();
        }
    }

    // a bipartite graph is not mixing, so the unphased properties fail;
    // a non-bipartite one upgrades any phased verdict
    if (report.bipartite) {
        decide(report, report.block_gluing, "block_gluing", Verdict::no, "bipartite-obstruction");
        decide(report, report.strong_irreducibility, "strong_irreducibility", Verdict::no,
               "bipartite-obstruction");
    } else {
        if (report.phased_block_gluing.verdict != Verdict::unknown)
            decide(report, report.block_gluing, "block_gluing", report.phased_block_gluing.verdict,
                   report.phased_block_gluing.verdict == Verdict::yes
                       ? "non-bipartite-phase-collapse"
                       : "unphased-implies-phased");
        if (report.phased_si.verdict != Verdict::unknown)
            decide(report, report.strong_irreducibility, "strong_irreducibility",
                   report.phased_si.verdict,
                   report.phased_si.verdict == Verdict::yes ? "non-bipartite-phase-collapse"
                                                            : "unphased-implies-phased");
    }

    validate_report(report);
    return report;
}

void validate_report(const ClassificationReport& report) {
    auto fail = [](const char* what) { throw std::logic_error(what); };
    if (report.mixing && !report.transitive) fail("mixing without transitivity");
    if (report.phased_si.verdict == Verdict::yes &&
        report.phased_block_gluing.verdict != Verdict::yes)
        fail("phased SI without phased block-gluing");
    if (report.dismantlable && *report.dismantlable && report.bipartite_dismantlable &&
        !*report.bipartite_dismantlable)
        fail("dismantlable but not bipartite-dismantlable");
    if (report.strong_irreducibility.verdict == Verdict::yes &&
        report.block_gluing.verdict != Verdict::yes)
        fail("SI without block-gluing");
    auto provenanced = [&](const Judgement& j, const char* claim) {
        if (j.verdict == Verdict::unknown) return;
        if (j.reason.empty()) fail(claim);
    };
    provenanced(report.phased_si, "phased_si verdict lacks provenance");
    provenanced(report.phased_block_gluing, "phased_block_gluing verdict lacks provenance");
    provenanced(report.block_gluing, "block_gluing verdict lacks provenance");
    provenanced(report.strong_irreducibility, "strong_irreducibility verdict lacks provenance");
    if (report.gluing_distance && *report.gluing_distance % 2 != 0)
        fail("odd gluing distance reported");
}

namespace {

nlohmann::json judgement_json(const Judgement& j) {
    nlohmann::json out;
    out["verdict"] = to_string(j.verdict);
    if (!j.reason.empty()) out["reason"] = j.reason;
    return out;
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace

std::string report_to_json(const ClassificationReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["graph"] = {{"vertices", report.vertex_count},
                  {"edges", report.edge_count},
                  {"loops", report.loop_count}};
    j["connected"] = report.connected;
    j["bipartite"] = report.bipartite;
    j["transitive"] = report.transitive;
    j["mixing"] = report.mixing;
    j["four_cycle_hom_free"] = opt_json(report.four_cycle_hom_free);
    j["dismantlable"] = opt_json(report.dismantlable);
    j["bipartite_dismantlable"] = opt_json(report.bipartite_dismantlable);
    j["cover_finite"] = opt_json(report.cover_finite);
    j["collapsible"] = judgement_json(report.collapsible);
    j["phased_si"] = judgement_json(report.phased_si);
    j["phased_block_gluing"] = judgement_json(report.phased_block_gluing);
    j["block_gluing"] = judgement_json(report.block_gluing);
    j["strong_irreducibility"] = judgement_json(report.strong_irreducibility);
    j["gluing_set"] = {"0", "e1"};
    j["gluing_distance"] = {{"found", report.gluing_distance.has_value()},
                            {"distance", opt_json(report.gluing_distance)},
                            {"cap", report.gluing_distance_cap}};
    if (!report.gluing_distance_note.empty())
        j["gluing_distance"]["note"] = report.gluing_distance_note;
    j["provenance"] = nlohmann::json::array();
    for (const auto& [claim, reason] : report.provenance)
        j["provenance"].push_back({{"claim", claim}, {"reason", reason}});
    return j.dump(2);
}

} // namespace homshift
