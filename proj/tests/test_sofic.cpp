#include <doctest.h>

#include <set>

#include "homshift/errors.hpp"
#include "homshift/folding.hpp"
#include "homshift/graph.hpp"
#include "homshift/sofic.hpp"
#include "oracles.hpp"

using namespace homshift;

namespace {

LabeledAutomaton chain_of_three() {
    LabeledAutomaton a;
    a.states = {"s0", "s1", "s2"};
    a.vertex_names = {"x"};
    a.transitions = {{0, {0, 0}, 1}, {1, {0, 0}, 2}};
    return a;
}

// oracle verdict: every word of `a` up to length 6 is a word of `b`
bool oracle_contained(const LabeledAutomaton& a, const LabeledAutomaton& b) {
    for (const auto& word : oracle::words_up_to(a, 6))
        if (!oracle::accepts_word(b, word)) return false;
    return true;
}

} // namespace

TEST_CASE("image presentation at n = 0 over a single edge") {
    const Graph k2 = fixture(FixtureFamily::complete, 2);
    const LabeledAutomaton a = build_image_presentation(k2, 0);
    REQUIRE(a.state_count() == 2);
    REQUIRE(a.transitions.size() == 2);
    // only the two checkerboard transitions, labelled with the diagonal
    for (const auto& t : a.transitions) {
        CHECK(t.from != t.to);
        CHECK(t.label.first == t.label.second);
        CHECK(t.label.first == t.to);
    }
}

TEST_CASE("image presentation state counts") {
    CHECK(build_image_presentation(fixture(FixtureFamily::hard_square), 1).state_count() == 5);
    CHECK(build_image_presentation(fixture(FixtureFamily::cycle, 3), 1).state_count() == 12);
}

TEST_CASE("pair-shift presentation state counts") {
    CHECK(build_tb_presentation(fixture(FixtureFamily::complete, 2)).state_count() == 2);
    CHECK(build_tb_presentation(fixture(FixtureFamily::hard_square)).state_count() == 4);
    CHECK(build_tb_presentation(fixture(FixtureFamily::cycle, 4)).state_count() == 8);
    CHECK(build_tb_presentation(fixture(FixtureFamily::cycle, 3)).state_count() == 9);
    CHECK_THROWS_AS(build_tb_presentation(parse_graph("a b\nc d")), domain_error);
}

TEST_CASE("essentialize") {
    // a source-only state disappears
    LabeledAutomaton a;
    a.states = {"src", "loop"};
    a.vertex_names = {"x"};
    a.transitions = {{0, {0, 0}, 1}, {1, {0, 0}, 1}};
    const LabeledAutomaton trimmed = essentialize(a);
    CHECK(trimmed.state_count() == 1);
    CHECK(trimmed.states[0] == "loop");
    CHECK(trimmed.essential);

    // already-essential automata are fixpoints
    const LabeledAutomaton tb = essentialize(build_tb_presentation(fixture(FixtureFamily::cycle, 3)));
    const LabeledAutomaton again = essentialize(tb);
    CHECK(again.states == tb.states);
    CHECK(again.transitions == tb.transitions);

    // no bi-infinite path at all: empty result
    CHECK(essentialize(chain_of_three()).state_count() == 0);
}

TEST_CASE("essentialize keeps the factor language on built presentations") {
    for (const Graph& g : {fixture(FixtureFamily::hard_square), fixture(FixtureFamily::cycle, 3)}) {
        const LabeledAutomaton raw = build_image_presentation(g, 1);
        const LabeledAutomaton trimmed = essentialize(raw);
        CHECK(trimmed.state_count() == raw.state_count());  // these are already essential
        CHECK(oracle::words_up_to(trimmed, 4) == [&] {
            LabeledAutomaton copy = raw;
            copy.essential = true;
            return oracle::words_up_to(copy, 4);
        }());
    }
}

TEST_CASE("contains: reflexivity and the K_2 language equality") {
    const Graph k2 = fixture(FixtureFamily::complete, 2);
    const LabeledAutomaton image = essentialize(build_image_presentation(k2, 0));
    const LabeledAutomaton tb = essentialize(build_tb_presentation(k2));
    CHECK(contains(image, image).contained);
    CHECK(contains(tb, tb).contained);
    CHECK(contains(image, tb).contained);
    CHECK(contains(tb, image).contained);
}

TEST_CASE("contains requires essential presentations") {
    const LabeledAutomaton raw = build_image_presentation(fixture(FixtureFamily::complete, 2), 0);
    CHECK_THROWS_AS(contains(raw, raw), domain_error);
}

TEST_CASE("contains: pair shift of C_3 exceeds the n=1 image, with verified witness") {
    const Graph c3 = fixture(FixtureFamily::cycle, 3);
    const LabeledAutomaton tb = essentialize(build_tb_presentation(c3));
    const LabeledAutomaton image = essentialize(build_image_presentation(c3, 1));
    const ContainsResult result = contains(tb, image);
    CHECK(!result.contained);
    REQUIRE(!result.witness.empty());
    CHECK(oracle::accepts_word(tb, result.witness));
    CHECK(!oracle::accepts_word(image, result.witness));
}

TEST_CASE("contains agrees with word-enumeration on the fixture automata") {
    const std::vector<std::pair<Graph, std::size_t>> cases = {
        {fixture(FixtureFamily::hard_square), 0}, {fixture(FixtureFamily::hard_square), 1},
        {fixture(FixtureFamily::cycle, 3), 0},    {fixture(FixtureFamily::cycle, 3), 1},
        {fixture(FixtureFamily::cycle, 4), 0},    {fixture(FixtureFamily::cycle, 4), 1},
        {fixture(FixtureFamily::complete, 2), 0},
    };
    for (const auto& [g, n] : cases) {
        const LabeledAutomaton tb = essentialize(build_tb_presentation(g));
        const LabeledAutomaton image = essentialize(build_image_presentation(g, n));
        CHECK(contains(tb, image).contained == oracle_contained(tb, image));
        CHECK(contains(image, tb).contained);         // the window is an even walk
        CHECK(oracle_contained(image, tb));
    }
}

TEST_CASE("block gluing: hard square") {
    const Graph hs = fixture(FixtureFamily::hard_square);
    const BlockGluingAt at0 = block_gluing_at(hs, 0);
    CHECK(!at0.gluing);
    REQUIRE(!at0.witness.empty());
    CHECK(at0.witness.size() == 1);  // a single off-diagonal pair already fails

    CHECK(block_gluing_at(hs, 1).gluing);
    CHECK(block_gluing_at(hs, 2).gluing);  // stays true past the threshold

    const auto search = minimal_gluing_distance(hs, 2);
    CHECK(search.distance() == 2);
}

TEST_CASE("block gluing: C_3 fails through n = 2 with verified witnesses") {
    const Graph c3 = fixture(FixtureFamily::cycle, 3);
    for (std::size_t n = 0; n <= 2; ++n) {
        const BlockGluingAt result = block_gluing_at(c3, n);
        CHECK(!result.gluing);
        REQUIRE(!result.witness.empty());
        const LabeledAutomaton tb = essentialize(build_tb_presentation(c3));
        const LabeledAutomaton image = essentialize(build_image_presentation(c3, n));
        CHECK(oracle::accepts_word(tb, result.witness));
        CHECK(!oracle::accepts_word(image, result.witness));
    }
    CHECK(!minimal_gluing_distance(c3, 2).distance().has_value());
}

TEST_CASE("minimal gluing distances of the small fixtures") {
    CHECK(minimal_gluing_distance(fixture(FixtureFamily::complete, 2), 2).distance() == 0);
    CHECK(minimal_gluing_distance(fixture(FixtureFamily::cycle, 4), 2).distance() == 2);
    CHECK(minimal_gluing_distance(fixture(FixtureFamily::complete, 4), 2).distance() == 2);
    CHECK(minimal_gluing_distance(fixture(FixtureFamily::path, 3), 2).distance() == 2);
}

TEST_CASE("gluing stays true once reached") {
    for (const Graph& g : {fixture(FixtureFamily::hard_square), fixture(FixtureFamily::cycle, 4),
                           fixture(FixtureFamily::complete, 2)}) {
        const auto search = minimal_gluing_distance(g, 2);
        REQUIRE(search.half_distance.has_value());
        for (std::size_t n = *search.half_distance; n <= 2; ++n)
            CHECK(block_gluing_at(g, n).gluing);
    }
}

TEST_CASE("characterisation consistency on four-cycle hom-free fixtures") {
    const std::vector<Graph> fc_free = {
        fixture(FixtureFamily::hard_square), fixture(FixtureFamily::cycle, 3),
        fixture(FixtureFamily::cycle, 5),    fixture(FixtureFamily::barbell, 3),
        fixture(FixtureFamily::path, 3),     fixture(FixtureFamily::star, 4),
        fixture(FixtureFamily::complete, 2),
    };
    for (const Graph& g : fc_free) {
        REQUIRE(is_four_cycle_hom_free(g));
        const auto found = minimal_gluing_distance(g, 2).half_distance;
        if (found) CHECK(is_bipartite_dismantlable(g));
        if (is_bipartite_dismantlable(g)) CHECK(found.has_value());
    }
}

TEST_CASE("witness formatting and JSON") {
    const Graph hs = fixture(FixtureFamily::hard_square);
    const BlockGluingAt at0 = block_gluing_at(hs, 0);
    const LabeledAutomaton tb = essentialize(build_tb_presentation(hs));
    const std::string word = format_label_word(tb, at0.witness);
    CHECK(word.front() == '(');
    CHECK(word.find(',') != std::string::npos);

    const std::string json = automaton_to_json(tb);
    CHECK(json.find("\"transitions\"") != std::string::npos);
    CHECK(json.find("\"essential\": true") != std::string::npos);
}

TEST_CASE("subset budget is a resource error") {
    const Graph c3 = fixture(FixtureFamily::cycle, 3);
    const LabeledAutomaton tb = essentialize(build_tb_presentation(c3));
    const LabeledAutomaton image = essentialize(build_image_presentation(c3, 1));
    CHECK_THROWS_AS(contains(tb, image, {4}), resource_error);
}
