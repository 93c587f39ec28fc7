#ifndef HOMSHIFT_GLUING_HPP
#define HOMSHIFT_GLUING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homshift/graph.hpp"
#include "homshift/walkgraph.hpp"

namespace homshift {

/// Rectangular pattern: a homomorphism from a width x height grid into
/// the base graph. Row 0 is the bottom row; cell (x, y) sits at
/// cells[y * width + x].
struct RectPattern {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<Vertex> cells;

    Vertex at(std::size_t x, std::size_t y) const { return cells[y * width + x]; }
    Vertex& at(std::size_t x, std::size_t y) { return cells[y * width + x]; }
};

/// Horizontally and vertically adjacent cells map to adjacent vertices.
bool rect_pattern_valid(const Graph& g, const RectPattern& p);

/// Doubly periodic configuration, stored as its fundamental domain. Valid
/// iff the fundamental domain is torus-valid (wrap edges included).
struct PeriodicConfig {
    RectPattern fundamental;

    std::size_t period_x() const { return fundamental.width; }
    std::size_t period_y() const { return fundamental.height; }
    Vertex at(std::int64_t x, std::int64_t y) const;
};

bool periodic_config_valid(const Graph& g, const PeriodicConfig& c);

/// Checkerboard in two adjacent vertices, periods (2, 2); value at the
/// origin is v.
PeriodicConfig checkerboard(const Graph& g, Vertex v, Vertex w);
/// Constant configuration; requires a self-loop at v.
PeriodicConfig constant_config(const Graph& g, Vertex v);

/// Extends a rectangular pattern to a doubly periodic configuration by
/// reflecting about the right and top faces (period 2*side - 2 per axis),
/// after thickening side-1 dimensions by a shifted copy. The restriction
/// to the original rectangle is the input pattern.
PeriodicConfig extend_periodic(const Graph& g, const RectPattern& p);

enum class GluePhase { zero, e1 };

struct GlueResult {
    GluePhase phase = GluePhase::zero;
    /// Vertical strip realising both patterns: `a` occupies rows
    /// [0, a.height) at columns [0, a.width); `b` occupies rows
    /// [b_row, b_row + b.height) at columns [0, b.width).
    RectPattern strip;
    std::size_t b_row = 0;
};

/// Glues two rectangular patterns with `b` above `a` at the requested
/// vertical separation, phase set {0, e1}: phase e1 places `b` one row
/// closer. Searches over periodised rows, so success certifies a genuine
/// configuration while failure is only "not found".
std::optional<GlueResult> glue_rect(const Graph& g, const RectPattern& a, const RectPattern& b,
                                    std::size_t separation, const WalkLimits& limits = {});

/// Boundary values on the L shape {(i,0), (n,i) : 0 <= i <= n} of the
/// (n+1) x (n+1) square: bottom[i] = (i, 0), right[i] = (n, i); the two
/// agree at the corner.
struct LBoundary {
    std::size_t n = 0;
    std::vector<Vertex> bottom;
    std::vector<Vertex> right;
};

struct ExtensionLimits {
    std::size_t max_free_cells = 16;
};

/// Exact number of homomorphism extensions of the L boundary to the full
/// square, by exhaustive backtracking over the n^2 interior cells.
std::uint64_t count_extensions(const Graph& g, const LBoundary& boundary,
                               const ExtensionLimits& limits = {});

RectPattern rect_pattern_from_json(const Graph& g, const std::string& json_text);
std::string rect_pattern_to_json(const Graph& g, const RectPattern& p);
/// Plain-text grid, top row first.
std::string rect_pattern_to_text(const Graph& g, const RectPattern& p);

} // namespace homshift

#endif
