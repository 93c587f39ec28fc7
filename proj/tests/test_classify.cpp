#include <doctest.h>

#include "homshift/classify.hpp"
#include "homshift/errors.hpp"
#include "homshift/graph.hpp"
#include "oracles.hpp"

using namespace homshift;

TEST_CASE("classify: hard square") {
    const ClassificationReport r = classify(fixture(FixtureFamily::hard_square));
    CHECK(r.connected);
    CHECK(!r.bipartite);
    CHECK(r.transitive);
    CHECK(r.mixing);
    CHECK(r.four_cycle_hom_free == true);
    CHECK(r.dismantlable == true);
    CHECK(r.bipartite_dismantlable == true);
    CHECK(r.cover_finite == true);
    CHECK(r.phased_si.verdict == Verdict::yes);
    CHECK(r.phased_si.reason == "bipartite-dismantlable");
    CHECK(r.phased_block_gluing.verdict == Verdict::yes);
    CHECK(r.block_gluing.verdict == Verdict::yes);
    CHECK(r.strong_irreducibility.verdict == Verdict::yes);
    CHECK(r.gluing_distance == 2);
}

TEST_CASE("classify: C_3 is mixing but not phased block-gluing") {
    const ClassificationReport r = classify(fixture(FixtureFamily::cycle, 3));
    CHECK(r.mixing);
    CHECK(r.four_cycle_hom_free == true);
    CHECK(r.bipartite_dismantlable == false);
    CHECK(r.cover_finite == false);
    CHECK(r.phased_block_gluing.verdict == Verdict::no);
    CHECK(r.phased_block_gluing.reason == "four-cycle-hom-free-characterisation");
    CHECK(r.phased_si.verdict == Verdict::no);
    CHECK(r.block_gluing.verdict == Verdict::no);
    CHECK(!r.gluing_distance.has_value());
    CHECK(!r.gluing_distance_note.empty());
}

TEST_CASE("classify: K_4 gets its distance from the even-distance search") {
    const ClassificationReport r = classify(fixture(FixtureFamily::complete, 4));
    CHECK(r.mixing);
    CHECK(r.four_cycle_hom_free == false);
    CHECK(r.collapsible.verdict == Verdict::no);
    CHECK(r.phased_block_gluing.verdict == Verdict::yes);
    CHECK(r.phased_block_gluing.reason == "even-distance-search");
    CHECK(r.gluing_distance == 2);
    CHECK(r.phased_si.verdict == Verdict::unknown);
    CHECK(r.strong_irreducibility.verdict == Verdict::unknown);
    CHECK(r.block_gluing.verdict == Verdict::yes);
}

TEST_CASE("classify: C_4 goes through the collapsing map") {
    const ClassificationReport r = classify(fixture(FixtureFamily::cycle, 4));
    CHECK(r.bipartite);
    CHECK(!r.mixing);
    CHECK(r.four_cycle_hom_free == false);
    CHECK(r.bipartite_dismantlable == true);
    CHECK(r.phased_si.verdict == Verdict::yes);
    CHECK(r.collapsible.verdict == Verdict::yes);
    CHECK(r.phased_block_gluing.verdict == Verdict::yes);
    // bipartite: the unphased properties fail outright
    CHECK(r.block_gluing.verdict == Verdict::no);
    CHECK(r.block_gluing.reason == "bipartite-obstruction");
    CHECK(r.strong_irreducibility.verdict == Verdict::no);
    CHECK(r.gluing_distance == 2);
}

TEST_CASE("classify: barbells and C_5 are mixing but not phased block-gluing") {
    for (const Graph& g : {fixture(FixtureFamily::barbell, 3), fixture(FixtureFamily::barbell, 4),
                           fixture(FixtureFamily::cycle, 5)}) {
        const ClassificationReport r = classify(g);
        CHECK(r.mixing);
        CHECK(r.four_cycle_hom_free == true);
        CHECK(r.bipartite_dismantlable == false);
        CHECK(r.cover_finite == false);
        CHECK(r.phased_block_gluing.verdict == Verdict::no);
        CHECK(r.phased_si.verdict == Verdict::no);
        CHECK(r.block_gluing.verdict == Verdict::no);
        CHECK(r.strong_irreducibility.verdict == Verdict::no);
    }
}

TEST_CASE("classify: trees are phased SI") {
    for (const Graph& g : {fixture(FixtureFamily::path, 5), fixture(FixtureFamily::star, 6),
                           parse_graph("a b\nb c\nb d\nd e")}) {
        ClassifyLimits limits;
        limits.sofic_n_cap = 1;
        const ClassificationReport r = classify(g, limits);
        CHECK(r.bipartite);
        CHECK(r.bipartite_dismantlable == true);
        CHECK(r.cover_finite == true);
        CHECK(r.phased_si.verdict == Verdict::yes);
        CHECK(r.phased_block_gluing.verdict == Verdict::yes);
        CHECK(r.block_gluing.verdict == Verdict::no);  // bipartite
    }
}

TEST_CASE("classify: disconnected input stops after the basic analysis") {
    const ClassificationReport r = classify(parse_graph("a b\nc d"));
    CHECK(!r.connected);
    CHECK(!r.transitive);
    CHECK(!r.mixing);
    CHECK(!r.four_cycle_hom_free.has_value());
    CHECK(!r.dismantlable.has_value());
    CHECK(!r.cover_finite.has_value());
    CHECK(r.phased_si.verdict == Verdict::no);
    CHECK(r.phased_si.reason == "disconnected-graph");
    CHECK(r.phased_block_gluing.verdict == Verdict::no);
}

TEST_CASE("classify: deterministic JSON") {
    ClassifyLimits limits;
    for (const Graph& g : {fixture(FixtureFamily::hard_square), fixture(FixtureFamily::complete, 4),
                           fixture(FixtureFamily::cycle, 3)}) {
        const std::string once = report_to_json(classify(g, limits));
        const std::string twice = report_to_json(classify(g, limits));
        CHECK(once == twice);
        CHECK(once.find("\"schema\": 1") != std::string::npos);
    }
}

TEST_CASE("classify: every decided verdict carries provenance") {
    std::mt19937_64 rng(139);
    ClassifyLimits limits;
    limits.sofic_n_cap = 1;
    for (int i = 0; i < 40; ++i) {
        const Graph g = oracle::random_connected_graph(rng, 6);
        const ClassificationReport r = classify(g, limits);  // validate_report runs inside
        for (const Judgement* j : {&r.phased_si, &r.phased_block_gluing, &r.block_gluing,
                                   &r.strong_irreducibility})
            if (j->verdict != Verdict::unknown) CHECK(!j->reason.empty());
        // the characterisation and the cover route may never disagree
        if (r.four_cycle_hom_free == true)
            CHECK(r.cover_finite == r.bipartite_dismantlable);
    }
}

TEST_CASE("validate_report rejects inconsistent reports") {
    ClassificationReport bad;
    bad.mixing = true;
    bad.transitive = false;
    CHECK_THROWS_AS(validate_report(bad), std::logic_error);

    ClassificationReport odd_distance = classify(fixture(FixtureFamily::hard_square));
    odd_distance.gluing_distance = 3;
    CHECK_THROWS_AS(validate_report(odd_distance), std::logic_error);
}

TEST_CASE("report JSON carries the fixed gluing set and optional fields as null") {
    const std::string json = report_to_json(classify(parse_graph("a b\nc d")));
    CHECK(json.find("\"gluing_set\": [\n    \"0\",\n    \"e1\"\n  ]") != std::string::npos);
    CHECK(json.find("\"four_cycle_hom_free\": null") != std::string::npos);
}
