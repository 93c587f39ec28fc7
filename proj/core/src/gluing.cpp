#include "homshift/gluing.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "homshift/errors.hpp"

namespace homshift {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

bool rect_pattern_valid(const Graph& g, const RectPattern& p) {
    if (p.width == 0 || p.height == 0 || p.cells.size() != p.width * p.height) return false;
    for (Vertex v : p.cells)
        if (v >= g.vertex_count()) return false;
    for (std::size_t y = 0; y < p.height; ++y)
        for (std::size_t x = 0; x < p.width; ++x) {
            if (x + 1 < p.width && !g.adjacent(p.at(x, y), p.at(x + 1, y))) return false;
            if (y + 1 < p.height && !g.adjacent(p.at(x, y), p.at(x, y + 1))) return false;
        }
    return true;
}

Vertex PeriodicConfig::at(std::int64_t x, std::int64_t y) const {
    return fundamental.at(static_cast<std::size_t>(floor_mod(x, static_cast<std::int64_t>(period_x()))),
                          static_cast<std::size_t>(floor_mod(y, static_cast<std::int64_t>(period_y()))));
}

bool periodic_config_valid(const Graph& g, const PeriodicConfig& c) {
    const auto px = static_cast<std::int64_t>(c.period_x());
    const auto py = static_cast<std::int64_t>(c.period_y());
    if (px == 0 || py == 0) return false;
    for (std::int64_t y = 0; y < py; ++y)
        for (std::int64_t x = 0; x < px; ++x) {
            if (!g.adjacent(c.at(x, y), c.at(x + 1, y))) return false;
            if (!g.adjacent(c.at(x, y), c.at(x, y + 1))) return false;
        }
    return true;
}

PeriodicConfig checkerboard(const Graph& g, Vertex v, Vertex w) {
    if (!g.adjacent(v, w)) throw domain_error("checkerboard requires adjacent vertices");
    PeriodicConfig c;
    c.fundamental.width = 2;
    c.fundamental.height = 2;
    c.fundamental.cells = {v, w, w, v};
    return c;
}

PeriodicConfig constant_config(const Graph& g, Vertex v) {
    if (!g.has_loop(v)) throw domain_error("constant configuration requires a self-loop");
    PeriodicConfig c;
    c.fundamental.width = 1;
    c.fundamental.height = 1;
    c.fundamental.cells = {v};
    return c;
}

namespace {

RectPattern hstack(const RectPattern& p) {
    // duplicate the single column, displaced vertically by one
    RectPattern q;
    q.width = 2;
    q.height = p.height;
    q.cells.resize(2 * p.height);
    for (std::size_t y = 0; y < p.height; ++y) {
        q.at(0, y) = p.at(0, y);
        q.at(1, y) = p.at(0, y + 1 < p.height ? y + 1 : y - 1);
    }
    return q;
}

RectPattern vstack(const RectPattern& p) {
    RectPattern q;
    q.width = p.width;
    q.height = 2;
    q.cells.resize(2 * p.width);
    for (std::size_t x = 0; x < p.width; ++x) {
        q.at(x, 0) = p.at(x, 0);
        q.at(x, 1) = p.at(x + 1 < p.width ? x + 1 : x - 1, 0);
    }
    return q;
}

RectPattern reflect_right(const RectPattern& p) {
    // period 2w-2: the reflected endpoint is not duplicated
    RectPattern q;
    q.width = 2 * p.width - 2;
    q.height = p.height;
    q.cells.resize(q.width * q.height);
    for (std::size_t y = 0; y < p.height; ++y)
        for (std::size_t x = 0; x < q.width; ++x)
            q.at(x, y) = p.at(x < p.width ? x : 2 * p.width - 2 - x, y);
    return q;
}

RectPattern reflect_top(const RectPattern& p) {
    RectPattern q;
    q.width = p.width;
    q.height = 2 * p.height - 2;
    q.cells.resize(q.width * q.height);
    for (std::size_t y = 0; y < q.height; ++y)
        for (std::size_t x = 0; x < p.width; ++x)
            q.at(x, y) = p.at(x, y < p.height ? y : 2 * p.height - 2 - y);
    return q;
}

} // namespace

PeriodicConfig extend_periodic(const Graph& g, const RectPattern& p) {
    if (!rect_pattern_valid(g, p)) throw domain_error("extend_periodic: invalid pattern");

    if (p.width == 1 && p.height == 1) {
        const Vertex v = p.at(0, 0);
        const Vertex u = g.neighbors(v).front();
        return u == v ? constant_config(g, v) : checkerboard(g, v, u);
    }

    RectPattern q = p;
    if (q.width == 1) q = hstack(q);
    if (q.height == 1) q = vstack(q);
    q = reflect_right(q);
    q = reflect_top(q);

    PeriodicConfig c;
    c.fundamental = std::move(q);
    return c;
}

namespace {

struct ParityBfs {
    // dist[v][p]: shortest walk length of parity p from the source
    std::vector<std::array<std::size_t, 2>> dist;
    std::vector<std::array<std::int64_t, 2>> parent;  // predecessor walk id, -1 if none

    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    ParityBfs(const AdjacencyList& adj, std::uint32_t source) {
        dist.assign(adj.size(), {kInf, kInf});
        parent.assign(adj.size(), {-1, -1});
        std::deque<std::pair<std::uint32_t, std::uint8_t>> queue;
        dist[source][0] = 0;
        queue.emplace_back(source, 0);
        while (!queue.empty()) {
            auto [v, p] = queue.front();
            queue.pop_front();
            const std::uint8_t np = p ^ 1;
            for (std::uint32_t w : adj[v]) {
                if (dist[w][np] == kInf) {
                    dist[w][np] = dist[v][p] + 1;
                    parent[w][np] = (static_cast<std::int64_t>(v) << 1) | p;
                    queue.emplace_back(w, np);
                }
            }
        }
    }

    // exact-length walks exist iff a walk of that parity is short enough;
    // any walk extends by two steps through a neighbour
    bool reachable_in(std::uint32_t v, std::size_t length) const {
        return dist[v][length & 1] <= length;
    }

    std::vector<std::uint32_t> shortest_path(std::uint32_t v, std::uint8_t par) const {
        std::vector<std::uint32_t> path;
        std::uint32_t cur = v;
        std::uint8_t p = par;
        path.push_back(cur);
        while (parent[cur][p] >= 0) {
            std::int64_t enc = parent[cur][p];
            cur = static_cast<std::uint32_t>(enc >> 1);
            p = static_cast<std::uint8_t>(enc & 1);
            path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }
};

std::uint32_t find_walk_index(const CyclicWalkGraph& cwg, const std::vector<Vertex>& row) {
    auto it = std::lower_bound(cwg.walks.begin(), cwg.walks.end(), row);
    if (it == cwg.walks.end() || *it != row)
        throw std::logic_error("periodised row is not a closed walk");
    return static_cast<std::uint32_t>(it - cwg.walks.begin());
}

} // namespace

std::optional<GlueResult> glue_rect(const Graph& g, const RectPattern& a, const RectPattern& b,
                                    std::size_t separation, const WalkLimits& limits) {
    if (!adjacency_connected(g.adjacency()))
        throw domain_error("glue_rect requires a connected graph");
    if (separation == 0) throw domain_error("glue_rect requires separation >= 1");
    if (!rect_pattern_valid(g, a) || !rect_pattern_valid(g, b))
        throw domain_error("glue_rect: invalid input pattern");

    const PeriodicConfig pa = extend_periodic(g, a);
    const PeriodicConfig pb = extend_periodic(g, b);
    const std::size_t period = std::lcm(pa.period_x(), pb.period_x());
    const CyclicWalkGraph cwg = build_cyclic_walk_graph(g, period, limits);

    std::vector<Vertex> a_top(period), b_bottom(period);
    for (std::size_t x = 0; x < period; ++x) {
        a_top[x] = pa.at(static_cast<std::int64_t>(x), static_cast<std::int64_t>(a.height) - 1);
        b_bottom[x] = pb.at(static_cast<std::int64_t>(x), 0);
    }
    const std::uint32_t source = find_walk_index(cwg, a_top);
    const std::uint32_t target = find_walk_index(cwg, b_bottom);

    const ParityBfs bfs(cwg.adj, source);
    std::optional<GluePhase> phase;
    std::size_t length = 0;
    if (bfs.reachable_in(target, separation)) {
        phase = GluePhase::zero;
        length = separation;
    } else if (separation >= 2 && bfs.reachable_in(target, separation - 1)) {
        phase = GluePhase::e1;
        length = separation - 1;
    }
    if (!phase) return std::nullopt;

    // shortest walk of the right parity, padded to the exact length by
    // bouncing through a neighbour of the target row
    std::vector<std::uint32_t> rows = bfs.shortest_path(target, length & 1);
    const std::uint32_t bounce = cwg.adj[target].front();
    while (rows.size() < length + 1) {
        rows.push_back(bounce);
        rows.push_back(target);
    }

    GlueResult result;
    result.phase = *phase;
    result.b_row = a.height - 1 + length;
    result.strip.width = period;
    result.strip.height = a.height + length - 1 + b.height;
    result.strip.cells.resize(result.strip.width * result.strip.height);
    for (std::size_t y = 0; y < a.height; ++y)
        for (std::size_t x = 0; x < period; ++x)
            result.strip.at(x, y) = pa.at(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y));
    for (std::size_t t = 1; t < length; ++t)
        for (std::size_t x = 0; x < period; ++x)
            result.strip.at(x, a.height - 1 + t) = cwg.walks[rows[t]][x];
    for (std::size_t y = 0; y < b.height; ++y)
        for (std::size_t x = 0; x < period; ++x)
            result.strip.at(x, result.b_row + y) = pb.at(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y));
    return result;
}

std::uint64_t count_extensions(const Graph& g, const LBoundary& boundary,
                               const ExtensionLimits& limits) {
    const std::size_t n = boundary.n;
    if (boundary.bottom.size() != n + 1 || boundary.right.size() != n + 1)
        throw domain_error("count_extensions: boundary arrays must have n+1 entries");
    if (boundary.bottom[n] != boundary.right[0])
        throw domain_error("count_extensions: corner cell disagrees");
    for (Vertex v : boundary.bottom)
        if (v >= g.vertex_count()) throw domain_error("count_extensions: vertex out of range");
    for (Vertex v : boundary.right)
        if (v >= g.vertex_count()) throw domain_error("count_extensions: vertex out of range");
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.adjacent(boundary.bottom[i], boundary.bottom[i + 1]))
            throw domain_error("count_extensions: bottom row is not a walk");
        if (!g.adjacent(boundary.right[i], boundary.right[i + 1]))
            throw domain_error("count_extensions: right column is not a walk");
    }
    if (n * n > limits.max_free_cells)
        throw resource_error("count_extensions: " + std::to_string(n * n) +
                             " free cells exceed the budget of " +
                             std::to_string(limits.max_free_cells));
    if (n == 0) return 1;

    // grid[(x, y)] for the full square; interior cells are x in [0, n-1],
    // y in [1, n], filled row by row
    std::vector<Vertex> grid((n + 1) * (n + 1), 0);
    auto cell = [&](std::size_t x, std::size_t y) -> Vertex& { return grid[y * (n + 1) + x]; };
    for (std::size_t i = 0; i <= n; ++i) {
        cell(i, 0) = boundary.bottom[i];
        cell(n, i) = boundary.right[i];
    }

    std::uint64_t count = 0;
    auto fill = [&](auto&& self, std::size_t x, std::size_t y) -> void {
        if (y > n) {
            ++count;
            return;
        }
        const std::size_t nx = (x + 1 < n) ? x + 1 : 0;
        const std::size_t ny = (x + 1 < n) ? y : y + 1;
        for (Vertex v : g.neighbors(cell(x, y - 1))) {  // below
            if (x > 0 && !g.adjacent(cell(x - 1, y), v)) continue;       // left
            if (x + 1 == n && !g.adjacent(boundary.right[y], v)) continue;  // right boundary
            cell(x, y) = v;
            self(self, nx, ny);
        }
    };
    fill(fill, 0, 1);
    return count;
}

RectPattern rect_pattern_from_json(const Graph& g, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("pattern JSON: ") + e.what());
    }
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw parse_error("pattern JSON: missing non-empty 'rows' array");
    RectPattern p;
    p.height = j["rows"].size();
    for (std::size_t y = 0; y < p.height; ++y) {
        const auto& row = j["rows"][y];
        if (!row.is_array() || row.empty())
            throw parse_error("pattern JSON: each row must be a non-empty array");
        if (y == 0) {
            p.width = row.size();
            p.cells.resize(p.width * p.height);
        } else if (row.size() != p.width) {
            throw parse_error("pattern JSON: ragged rows");
        }
        for (std::size_t x = 0; x < p.width; ++x)
            p.at(x, y) = g.vertex(row[x].get<std::string>());
    }
    if (!rect_pattern_valid(g, p)) throw domain_error("pattern is not a homomorphism");
    return p;
}

std::string rect_pattern_to_json(const Graph& g, const RectPattern& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t y = 0; y < p.height; ++y) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t x = 0; x < p.width; ++x) row.push_back(g.name(p.at(x, y)));
        rows.push_back(row);
    }
    nlohmann::json j;
    j["width"] = p.width;
    j["height"] = p.height;
    j["rows"] = rows;
    return j.dump(2);
}

std::string rect_pattern_to_text(const Graph& g, const RectPattern& p) {
    std::ostringstream out;
    for (std::size_t yy = p.height; yy-- > 0;) {
        for (std::size_t x = 0; x < p.width; ++x) {
            if (x) out << ' ';
            out << g.name(p.at(x, yy));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace homshift
