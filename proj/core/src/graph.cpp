#include "homshift/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "homshift/errors.hpp"

namespace homshift {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Graph Graph::from_edge_list(const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    std::unordered_map<std::string, Vertex> ids;
    auto intern = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        Vertex id = static_cast<Vertex>(g.names_.size());
        ids.emplace(name, id);
        g.names_.push_back(name);
        g.adj_.emplace_back();
        return id;
    };
    for (const auto& [a, b] : edges) {
        Vertex u = intern(a);
        Vertex v = intern(b);
        g.adj_[u].push_back(v);
        if (u != v) g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) sort_unique(nbrs);
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < adj_.size(); ++v) {
        twice += adj_[v].size();
        if (has_loop(v)) ++twice;  // a loop occurs once in adj_ but counts as one edge
    }
    return twice / 2;
}

std::size_t Graph::loop_count() const {
    std::size_t loops = 0;
    for (Vertex v = 0; v < adj_.size(); ++v)
        if (has_loop(v)) ++loops;
    return loops;
}

std::optional<Vertex> Graph::find_vertex(std::string_view name) const {
    for (Vertex v = 0; v < names_.size(); ++v)
        if (names_[v] == name) return v;
    return std::nullopt;
}

Vertex Graph::vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw domain_error("unknown vertex name: " + std::string(name));
}

Graph parse_graph(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        std::string buf(line);
        if (!buf.empty() && buf.back() == '\r') buf.pop_back();
        std::istringstream in(buf);
        std::string first, second, extra;
        if (!(in >> first)) continue;       // blank line
        if (first.front() == '#') continue; // comment
        if (!(in >> second) || (in >> extra))
            throw parse_error("expected two vertex names, got '" + buf + "'", line_no);
        edges.emplace_back(std::move(first), std::move(second));
        if (eol == std::string_view::npos) break;
    }
    if (edges.empty()) throw parse_error("no edges found");
    return Graph::from_edge_list(edges);
}

std::string serialize_graph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    // Emit an introducing edge per vertex first so that first-appearance
    // order in the output matches the id order, then the rest.
    std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
    std::ostringstream out;
    auto emit = [&](Vertex u, Vertex v) {
        if (done[u][v]) return;
        done[u][v] = done[v][u] = true;
        out << g.name(u) << ' ' << g.name(v) << '\n';
    };
    for (Vertex u = 0; u < n; ++u) {
        if (g.neighbors(u).empty()) continue;
        emit(u, g.neighbors(u).front());
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (v >= u) emit(u, v);
    return out.str();
}

Graph fixture(FixtureFamily family, std::size_t k) {
    std::vector<std::pair<std::string, std::string>> edges;
    auto num = [](std::size_t i) { return std::to_string(i); };
    switch (family) {
    case FixtureFamily::complete:
        if (k < 2) throw domain_error("complete graph needs k >= 2");
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j)
                edges.emplace_back(num(i), num(j));
        break;
    case FixtureFamily::cycle:
        if (k < 3) throw domain_error("cycle needs k >= 3");
        for (std::size_t i = 0; i < k; ++i)
            edges.emplace_back(num(i), num((i + 1) % k));
        break;
    case FixtureFamily::barbell:
        // vertices 1..k, loops at both ends, path edges between
        if (k < 2) throw domain_error("barbell needs k >= 2");
        edges.emplace_back(num(1), num(1));
        for (std::size_t i = 1; i < k; ++i)
            edges.emplace_back(num(i), num(i + 1));
        edges.emplace_back(num(k), num(k));
        break;
    case FixtureFamily::hard_square:
        edges.emplace_back("0", "1");
        edges.emplace_back("0", "0");
        break;
    case FixtureFamily::path:
        if (k < 2) throw domain_error("path needs k >= 2");
        for (std::size_t i = 1; i < k; ++i)
            edges.emplace_back(num(i), num(i + 1));
        break;
    case FixtureFamily::star:
        if (k < 2) throw domain_error("star needs k >= 2");
        for (std::size_t i = 2; i <= k; ++i)
            edges.emplace_back(num(1), num(i));
        break;
    }
    return Graph::from_edge_list(edges);
}

std::optional<FixtureFamily> fixture_family_from_name(std::string_view name) {
    if (name == "complete") return FixtureFamily::complete;
    if (name == "cycle") return FixtureFamily::cycle;
    if (name == "barbell") return FixtureFamily::barbell;
    if (name == "hard_square") return FixtureFamily::hard_square;
    if (name == "path") return FixtureFamily::path;
    if (name == "star") return FixtureFamily::star;
    return std::nullopt;
}

std::vector<std::size_t> bfs_distances(const AdjacencyList& adj, Vertex source) {
    std::vector<std::size_t> dist(adj.size(), kUnreached);
    std::deque<Vertex> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj[v]) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool adjacency_connected(const AdjacencyList& adj) {
    if (adj.empty()) return false;
    auto dist = bfs_distances(adj, 0);
    return std::find(dist.begin(), dist.end(), kUnreached) == dist.end();
}

std::optional<std::vector<std::uint8_t>> adjacency_bipartition(const AdjacencyList& adj) {
    std::vector<std::uint8_t> side(adj.size(), 2);
    for (Vertex root = 0; root < adj.size(); ++root) {
        if (side[root] != 2) continue;
        side[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : adj[v]) {
                if (w == v) return std::nullopt;  // self-loop: odd closed walk
                if (side[w] == 2) {
                    side[w] = static_cast<std::uint8_t>(1 - side[v]);
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::optional<std::size_t> adjacency_diameter(const AdjacencyList& adj) {
    if (adj.empty()) return std::nullopt;
    std::size_t best = 0;
    for (Vertex s = 0; s < adj.size(); ++s) {
        auto dist = bfs_distances(adj, s);
        for (std::size_t d : dist) {
            if (d == kUnreached) return std::nullopt;  // disconnected
            best = std::max(best, d);
        }
    }
    return best;
}

BasicAnalysis analyze_basic(const Graph& g) {
    BasicAnalysis result;
    result.connected = adjacency_connected(g.adjacency());
    result.bipartition = adjacency_bipartition(g.adjacency());
    result.diameter = adjacency_diameter(g.adjacency());
    return result;
}

namespace {

std::string pair_name(const Graph& a, const Graph& b, Vertex u, Vertex v) {
    return "(" + a.name(u) + "," + b.name(v) + ")";
}

ProductResult assemble_product(const Graph& a, const Graph& b,
                               const std::vector<std::vector<std::pair<Vertex, Vertex>>>& nbrs) {
    // nbrs is indexed by u*|b|+v; drop any vertex that ended up with no
    // neighbours so the result stays a valid Graph.
    const std::size_t nb = b.vertex_count();
    ProductResult result;
    std::vector<std::pair<std::string, std::string>> edges;
    for (Vertex u = 0; u < a.vertex_count(); ++u) {
        for (Vertex v = 0; v < nb; ++v) {
            const auto& out = nbrs[u * nb + v];
            if (out.empty()) {
                result.removed_isolated.push_back(pair_name(a, b, u, v));
                continue;
            }
            for (const auto& [w, x] : out) {
                if (std::make_pair(u, v) <= std::make_pair(w, x) && !nbrs[w * nb + x].empty())
                    edges.emplace_back(pair_name(a, b, u, v), pair_name(a, b, w, x));
            }
        }
    }
    result.graph = Graph::from_edge_list(edges);
    return result;
}

} // namespace

ProductResult tensor_product(const Graph& a, const Graph& b) {
    const std::size_t nb = b.vertex_count();
    std::vector<std::vector<std::pair<Vertex, Vertex>>> nbrs(a.vertex_count() * nb);
    for (Vertex u = 0; u < a.vertex_count(); ++u)
        for (Vertex v = 0; v < nb; ++v)
            for (Vertex w : a.neighbors(u))
                for (Vertex x : b.neighbors(v))
                    nbrs[u * nb + v].emplace_back(w, x);
    return assemble_product(a, b, nbrs);
}

ProductResult cartesian_product(const Graph& a, const Graph& b) {
    const std::size_t nb = b.vertex_count();
    std::vector<std::vector<std::pair<Vertex, Vertex>>> nbrs(a.vertex_count() * nb);
    for (Vertex u = 0; u < a.vertex_count(); ++u) {
        for (Vertex v = 0; v < nb; ++v) {
            auto& out = nbrs[u * nb + v];
            for (Vertex x : b.neighbors(v)) out.emplace_back(u, x);
            for (Vertex w : a.neighbors(u)) out.emplace_back(w, v);
        }
    }
    return assemble_product(a, b, nbrs);
}

std::vector<Graph> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<Graph> components;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> members;
        std::deque<Vertex> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            members.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<std::pair<std::string, std::string>> edges;
        for (Vertex v : members)
            for (Vertex w : g.neighbors(v))
                if (w >= v) edges.emplace_back(g.name(v), g.name(w));
        components.push_back(Graph::from_edge_list(edges));
    }
    return components;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph homshift {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  \"" << g.name(v) << "\";\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.neighbors(v))
            if (w >= v) out << "  \"" << g.name(v) << "\" -- \"" << g.name(w) << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace homshift
