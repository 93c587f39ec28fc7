#include "homshift/sofic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "homshift/errors.hpp"

namespace homshift {

namespace {

std::string join_walk(const Graph& g, const std::vector<Vertex>& walk) {
    std::string s;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i) s += ',';
        s += g.name(walk[i]);
    }
    return s;
}

void sort_transitions(LabeledAutomaton& a) {
    std::sort(a.transitions.begin(), a.transitions.end());
    a.transitions.erase(std::unique(a.transitions.begin(), a.transitions.end()),
                        a.transitions.end());
}

} // namespace

LabeledAutomaton build_image_presentation(const Graph& g, std::size_t n,
                                          const WalkLimits& limits) {
    const WalkGraphN wg = build_walk_graph(g, n, limits);
    LabeledAutomaton a;
    a.vertex_names = g.names();
    a.states.reserve(wg.size());
    for (const auto& walk : wg.walks) a.states.push_back(join_walk(g, walk));
    for (std::uint32_t z = 0; z < wg.size(); ++z) {
        for (std::uint32_t to : wg.adj[z]) {
            const auto& target = wg.walks[to];
            a.transitions.push_back({z, {target.back(), target.front()}, to});
        }
    }
    sort_transitions(a);
    return a;
}

LabeledAutomaton build_tb_presentation(const Graph& g) {
    if (!adjacency_connected(g.adjacency()))
        throw domain_error("build_tb_presentation requires a connected graph");
    const auto bipartition = adjacency_bipartition(g.adjacency());

    LabeledAutomaton a;
    a.vertex_names = g.names();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
            // an even-length walk joins x and y iff they share a partite
            // class; without a bipartition every pair qualifies
            if (bipartition && (*bipartition)[x] != (*bipartition)[y]) continue;
            index.emplace((std::uint64_t(x) << 32) | y, static_cast<std::uint32_t>(pairs.size()));
            pairs.emplace_back(x, y);
            a.states.push_back("(" + g.name(x) + "," + g.name(y) + ")");
        }
    }
    for (std::uint32_t s = 0; s < pairs.size(); ++s) {
        const auto [x, y] = pairs[s];
        for (Vertex x2 : g.neighbors(x)) {
            for (Vertex y2 : g.neighbors(y)) {
                auto it = index.find((std::uint64_t(x2) << 32) | y2);
                if (it == index.end())
                    throw std::logic_error("tb presentation: step left the state set");
                a.transitions.push_back({s, {x2, y2}, it->second});
            }
        }
    }
    sort_transitions(a);
    return a;
}

LabeledAutomaton essentialize(LabeledAutomaton a) {
    std::vector<bool> alive(a.state_count(), true);
    for (;;) {
        std::vector<std::size_t> in(a.state_count(), 0), out(a.state_count(), 0);
        for (const auto& t : a.transitions) {
            if (!alive[t.from] || !alive[t.to]) continue;
            ++out[t.from];
            ++in[t.to];
        }
        bool changed = false;
        for (std::uint32_t s = 0; s < a.state_count(); ++s) {
            if (alive[s] && (in[s] == 0 || out[s] == 0)) {
                alive[s] = false;
                changed = true;
            }
        }
        if (!changed) break;
    }

    LabeledAutomaton trimmed;
    trimmed.vertex_names = a.vertex_names;
    trimmed.essential = true;
    std::vector<std::uint32_t> remap(a.state_count(), 0);
    for (std::uint32_t s = 0; s < a.state_count(); ++s) {
        if (alive[s]) {
            remap[s] = static_cast<std::uint32_t>(trimmed.states.size());
            trimmed.states.push_back(a.states[s]);
        }
    }
    for (const auto& t : a.transitions)
        if (alive[t.from] && alive[t.to])
            trimmed.transitions.push_back({remap[t.from], t.label, remap[t.to]});
    sort_transitions(trimmed);
    return trimmed;
}

namespace {

using Bitset = std::vector<std::uint64_t>;

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t w : b) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

bool bit_test(const Bitset& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void bit_set(Bitset& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }
bool bit_empty(const Bitset& b) {
    for (std::uint64_t w : b)
        if (w) return false;
    return true;
}

std::uint64_t label_key(const SoficLabel& l) {
    return (std::uint64_t(l.first) << 32) | l.second;
}

} // namespace

ContainsResult contains(const LabeledAutomaton& a, const LabeledAutomaton& b,
                        const SubsetLimits& limits) {
    if (!a.essential || !b.essential)
        throw domain_error("contains requires essentialized automata");
    if (a.states.empty()) return {true, {}};

    // b's transitions grouped by (state, label)
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> b_by_label;
    for (const auto& t : b.transitions)
        b_by_label[label_key(t.label)].emplace_back(t.from, t.to);

    std::vector<std::vector<const SoficTransition*>> a_out(a.state_count());
    for (const auto& t : a.transitions) a_out[t.from].push_back(&t);

    const std::size_t words = (b.state_count() + 63) / 64;
    Bitset full(std::max<std::size_t>(words, 1), 0);
    for (std::uint32_t s = 0; s < b.state_count(); ++s) bit_set(full, s);

    struct NodeKey {
        std::uint32_t a_state;
        Bitset subset;
        bool operator==(const NodeKey&) const = default;
    };
    struct NodeKeyHash {
        std::size_t operator()(const NodeKey& k) const noexcept {
            return BitsetHash{}(k.subset) * 31 + k.a_state;
        }
    };
    struct NodeInfo {
        std::int64_t parent;  // index into order, -1 for a start node
        SoficLabel via{};
    };

    std::unordered_map<NodeKey, std::uint32_t, NodeKeyHash> seen;
    std::vector<NodeKey> order;
    std::vector<NodeInfo> info;
    std::deque<std::uint32_t> queue;

    auto visit = [&](NodeKey key, std::int64_t parent, SoficLabel via) -> bool {
        auto [it, inserted] = seen.emplace(std::move(key), static_cast<std::uint32_t>(order.size()));
        if (!inserted) return false;
        if (order.size() >= limits.pair_budget)
            throw resource_error("contains: subset pair budget " +
                                 std::to_string(limits.pair_budget) + " exceeded");
        order.push_back(it->first);
        info.push_back({parent, via});
        queue.push_back(it->second);
        return true;
    };

    for (std::uint32_t s = 0; s < a.state_count(); ++s)
        visit({s, full}, -1, {});

    auto witness_of = [&](std::uint32_t node, SoficLabel last) {
        std::vector<SoficLabel> word{last};
        for (std::int64_t cur = node; info[static_cast<std::size_t>(cur)].parent >= 0;
             cur = info[static_cast<std::size_t>(cur)].parent)
            word.push_back(info[static_cast<std::size_t>(cur)].via);
        std::reverse(word.begin(), word.end());
        return word;
    };

    while (!queue.empty()) {
        const std::uint32_t id = queue.front();
        queue.pop_front();
        const NodeKey node = order[id];
        for (const SoficTransition* t : a_out[node.a_state]) {
            Bitset next(full.size(), 0);
            auto it = b_by_label.find(label_key(t->label));
            bool any = false;
            if (it != b_by_label.end()) {
                for (const auto& [from, to] : it->second) {
                    if (bit_test(node.subset, from)) {
                        bit_set(next, to);
                        any = true;
                    }
                }
            }
            if (!any || bit_empty(next))
                return {false, witness_of(id, t->label)};
            visit({t->to, std::move(next)}, id, t->label);
        }
    }
    return {true, {}};
}

BlockGluingAt block_gluing_at(const Graph& g, std::size_t n, const WalkLimits& walk_limits,
                              const SubsetLimits& subset_limits) {
    const LabeledAutomaton tb = essentialize(build_tb_presentation(g));
    const LabeledAutomaton image = essentialize(build_image_presentation(g, n, walk_limits));
    // The image always embeds into the pair shift: the window itself is an
    // even walk between its endpoints.
    if (!contains(image, tb, subset_limits).contained)
        throw std::logic_error("image presentation not contained in the pair shift");
    auto result = contains(tb, image, subset_limits);
    return {result.contained, std::move(result.witness)};
}

GluingDistanceSearch minimal_gluing_distance(const Graph& g, std::size_t n_cap,
                                             const WalkLimits& walk_limits,
                                             const SubsetLimits& subset_limits) {
    GluingDistanceSearch search;
    search.n_cap = n_cap;
    for (std::size_t n = 0; n <= n_cap; ++n) {
        auto at = block_gluing_at(g, n, walk_limits, subset_limits);
        if (at.gluing) {
            search.half_distance = n;
            search.cap_witness.clear();
            break;
        }
        search.cap_witness = std::move(at.witness);
    }
    return search;
}

std::string automaton_to_json(const LabeledAutomaton& a) {
    nlohmann::json j;
    j["essential"] = a.essential;
    j["states"] = a.states;
    j["transitions"] = nlohmann::json::array();
    for (const auto& t : a.transitions) {
        j["transitions"].push_back({{"from", t.from},
                                    {"label", {a.vertex_names[t.label.first], a.vertex_names[t.label.second]}},
                                    {"to", t.to}});
    }
    return j.dump(2);
}

std::string format_label_word(const LabeledAutomaton& a, const std::vector<SoficLabel>& word) {
    std::ostringstream out;
    for (const auto& [top, bottom] : word)
        out << '(' << a.vertex_names[top] << ',' << a.vertex_names[bottom] << ')';
    return out.str();
}

} // namespace homshift
