#include <doctest.h>

#include <algorithm>

#include "homshift/errors.hpp"
#include "homshift/folding.hpp"
#include "homshift/graph.hpp"
#include "oracles.hpp"

using namespace homshift;

namespace {

Graph without_vertex(const Graph& g, const std::string& victim) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.name(v) == victim) continue;
        for (Vertex w : g.neighbors(v))
            if (w >= v && g.name(w) != victim) edges.emplace_back(g.name(v), g.name(w));
    }
    return Graph::from_edge_list(edges);
}

} // namespace

TEST_CASE("find_fold exact answers") {
    CHECK(find_fold(fixture(FixtureFamily::cycle, 4)) == std::make_pair(Vertex(0), Vertex(2)));
    CHECK(!find_fold(fixture(FixtureFamily::complete, 3)).has_value());
    CHECK(find_fold(fixture(FixtureFamily::hard_square)) == std::make_pair(Vertex(1), Vertex(0)));
}

TEST_CASE("find_fold agrees with the definitional pair scan") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_connected_graph(rng, 7);
        const auto pairs = oracle::naive_fold_pairs(g);
        const auto fold = find_fold(g);
        if (pairs.empty()) {
            CHECK(!fold.has_value());
        } else {
            CHECK(fold == *std::min_element(pairs.begin(), pairs.end()));
        }
    }
}

TEST_CASE("stiff_reduce terminals") {
    const FoldSequence hs = stiff_reduce(fixture(FixtureFamily::hard_square));
    CHECK(hs.terminal.vertex_count() == 1);
    CHECK(hs.terminal.has_loop(0));
    REQUIRE(hs.steps.size() == 1);
    CHECK(hs.steps[0].folded == "1");
    CHECK(hs.steps[0].target == "0");

    const FoldSequence c4 = stiff_reduce(fixture(FixtureFamily::cycle, 4));
    CHECK(c4.terminal.vertex_count() == 2);
    CHECK(c4.terminal.edge_count() == 1);
    CHECK(c4.terminal.loop_count() == 0);

    const FoldSequence bar3 = stiff_reduce(fixture(FixtureFamily::barbell, 3));
    CHECK(bar3.steps.empty());
    CHECK(bar3.terminal == fixture(FixtureFamily::barbell, 3));
    CHECK(oracle::naive_fold_pairs(fixture(FixtureFamily::barbell, 3)).empty());
}

TEST_CASE("dismantlability classification") {
    CHECK(is_dismantlable(fixture(FixtureFamily::hard_square)));
    CHECK(is_bipartite_dismantlable(fixture(FixtureFamily::hard_square)));

    CHECK(!is_dismantlable(fixture(FixtureFamily::cycle, 4)));
    CHECK(is_bipartite_dismantlable(fixture(FixtureFamily::cycle, 4)));

    CHECK(!is_dismantlable(fixture(FixtureFamily::cycle, 5)));
    CHECK(!is_bipartite_dismantlable(fixture(FixtureFamily::cycle, 5)));

    CHECK_THROWS_AS(is_dismantlable(parse_graph("a b\nc d")), domain_error);
}

TEST_CASE("dismantlability relations on a random corpus") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        const Graph g = oracle::random_connected_graph(rng, 7);
        const bool d = is_dismantlable(g);
        const bool bd = is_bipartite_dismantlable(g);
        const bool bip = analyze_basic(g).bipartite();
        if (d) CHECK(bd);
        if (bip) CHECK(!d);          // folds preserve bipartiteness
        if (bd && !bip) CHECK(d);    // non-bipartite bipartite-dismantlable folds to a loop
    }
}

TEST_CASE("four-cycle hom-freeness: exact answers") {
    CHECK(is_four_cycle_hom_free(fixture(FixtureFamily::hard_square)));
    CHECK(!is_four_cycle_hom_free(fixture(FixtureFamily::complete, 4)));
    CHECK(!is_four_cycle_hom_free(fixture(FixtureFamily::barbell, 2)));
    CHECK(is_four_cycle_hom_free(fixture(FixtureFamily::cycle, 3)));
    CHECK(is_four_cycle_hom_free(fixture(FixtureFamily::cycle, 5)));
    CHECK(!is_four_cycle_hom_free(fixture(FixtureFamily::cycle, 4)));
    CHECK(is_four_cycle_hom_free(fixture(FixtureFamily::barbell, 3)));
    CHECK(is_four_cycle_hom_free(fixture(FixtureFamily::path, 5)));
}

TEST_CASE("Bar_2 admits a non-degenerate four-cycle image") {
    // witness: vertices (1,2,2,1) wrap around through both loops
    const Graph bar2 = fixture(FixtureFamily::barbell, 2);
    bool witness = false;
    for (const auto& f : oracle::all_c4_homs(bar2))
        if (f[0] != f[2] && f[1] != f[3]) witness = true;
    CHECK(witness);
}

TEST_CASE("brute-force, structural and oracle four-cycle checks agree") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_connected_graph(rng, 6);
        const bool brute = is_four_cycle_hom_free(g);
        CHECK(brute == four_cycle_hom_free_structural(g));
        CHECK(brute == oracle::naive_four_cycle_hom_free(g));
    }
}

TEST_CASE("fold steps preserve connectivity and bipartiteness") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 60; ++i) {
        const Graph g = oracle::random_connected_graph(rng, 7);
        const bool bip = analyze_basic(g).bipartite();
        Graph current = g;
        for (const auto& step : stiff_reduce(g).steps) {
            current = without_vertex(current, step.folded);
            const BasicAnalysis basic = analyze_basic(current);
            CHECK(basic.connected);
            CHECK(basic.bipartite() == bip);
        }
    }
}

TEST_CASE("fold confluence: random orders land on isomorphic terminals") {
    std::mt19937_64 rng(53);
    std::vector<Graph> corpus = {
        fixture(FixtureFamily::hard_square),    fixture(FixtureFamily::cycle, 4),
        fixture(FixtureFamily::cycle, 5),       fixture(FixtureFamily::barbell, 3),
        fixture(FixtureFamily::complete, 4),    fixture(FixtureFamily::path, 6),
        fixture(FixtureFamily::star, 5),
    };
    for (int i = 0; i < 20; ++i) corpus.push_back(oracle::random_connected_graph(rng, 8));

    for (const Graph& g : corpus) {
        const Graph reference = stiff_reduce(g).terminal;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Graph other = stiff_reduce(g, FoldPolicy::random, seed).terminal;
            CHECK(oracle::isomorphic(reference, other));
        }
    }
}

TEST_CASE("collapsing map: hard square and single edge") {
    const auto hs = find_collapsing_map(fixture(FixtureFamily::hard_square));
    REQUIRE(hs.found());
    CHECK(hs.witness->map == std::vector<Vertex>{0, 0});

    const auto edge = find_collapsing_map(fixture(FixtureFamily::complete, 2));
    REQUIRE(edge.found());
    CHECK(edge.witness->map == std::vector<Vertex>{1, 0});
}

TEST_CASE("collapsing map: C_5 has none, exhaustively") {
    const Graph c5 = fixture(FixtureFamily::cycle, 5);
    const auto result = find_collapsing_map(c5);
    CHECK(result.status == SearchStatus::exhausted);
    CHECK(!result.witness.has_value());

    // oracle: scan all 32 candidate maps v -> N(v)
    std::size_t collapsing = 0;
    std::vector<Vertex> f(5);
    auto scan = [&](auto&& self, std::size_t v) -> void {
        if (v == 5) {
            Endomorphism e{f};
            if (!is_graph_homomorphism(c5, e) || !moves_to_neighbor(c5, e)) return;
            const auto image = stable_image(c5, e);
            if ((image.size() == 1 && c5.has_loop(image[0])) ||
                (image.size() == 2 && c5.adjacent(image[0], image[1])))
                ++collapsing;
            return;
        }
        for (Vertex w : c5.neighbors(static_cast<Vertex>(v))) {
            f[v] = w;
            self(self, v + 1);
        }
    };
    scan(scan, 0);
    CHECK(collapsing == 0);
}

TEST_CASE("collapsing map: returned witnesses satisfy both invariants") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 80; ++i) {
        const Graph g = oracle::random_connected_graph(rng, 6);
        const auto result = find_collapsing_map(g);
        if (result.found()) {
            CHECK(is_graph_homomorphism(g, *result.witness));
            CHECK(moves_to_neighbor(g, *result.witness));
            const auto image = stable_image(g, *result.witness);
            const bool loop_vertex = image.size() == 1 && g.has_loop(image[0]);
            const bool edge = image.size() == 2 && g.adjacent(image[0], image[1]);
            CHECK((loop_vertex || edge));
        }
    }
}

TEST_CASE("collapsing map: tiny budget reports unknown") {
    const auto result = find_collapsing_map(fixture(FixtureFamily::complete, 5), {2});
    CHECK(result.status == SearchStatus::budget_exceeded);
    CHECK(result.unknown());
}

TEST_CASE("fold sequence JSON") {
    const std::string json = fold_sequence_to_json(stiff_reduce(fixture(FixtureFamily::hard_square)));
    CHECK(json.find("\"1\"") != std::string::npos);
    CHECK(json.find("steps") != std::string::npos);
    CHECK(json.find("terminal") != std::string::npos);
}
