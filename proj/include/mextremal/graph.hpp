#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace mextremal {

/// Bit c-1 set means color c is present on a pair.
using ColorMask = std::uint32_t;

inline constexpr int max_colors = 16;

constexpr auto color_bit(int c) -> ColorMask { return ColorMask{ 1 } << (c - 1); }
constexpr auto all_colors(int r) -> ColorMask { return (ColorMask{ 1 } << r) - 1; }
constexpr auto multiplicity(ColorMask m) -> int { return std::popcount(m); }

struct ColoredEdge
{
    int u;
    int v;
    int color;

    auto operator<=>(const ColoredEdge &) const = default;
};

/// An r-edge-colored multigraph on vertices 0..n-1 with colors 1..r. Each
/// unordered pair carries a subset of the colors; no loops.
class ColoredMultigraph
{
public:
    ColoredMultigraph() = default;
    ColoredMultigraph(int n, int r);

    /// Builds a graph from an edge list, running validate() on it first.
    static auto from_edges(int n, int r, std::span<const ColoredEdge> edges) -> ColoredMultigraph;

    auto n() const noexcept -> int { return _n; }
    auto r() const noexcept -> int { return _r; }

    auto colors(int u, int v) const -> ColorMask { return _masks[static_cast<std::size_t>(u) * _n + v]; }
    auto has_edge(int u, int v, int c) const -> bool { return (colors(u, v) & color_bit(c)) != 0; }
    auto adjacent(int u, int v) const -> bool { return colors(u, v) != 0; }

    /// Adds color c on {u,v}; throws Loop/VertexOutOfRange/ColorOutOfRange/DuplicateEdge.
    void add_edge(int u, int v, int c);
    /// Replaces the color set on {u,v} wholesale.
    void set_colors(int u, int v, ColorMask mask);

    auto edge_count(int c) const -> int { return _counts[c - 1]; }
    /// Sum of multiplicities over all pairs.
    auto total_edges() const -> int;
    /// Number of pairs carrying at least one color.
    auto pair_count() const -> int;

    auto color_degree(int v, int c) const -> int;
    /// Number of colored edges at v, counting multiplicity.
    auto degree(int v) const -> int;

    /// All colored edges sorted by (u, v, color) with u < v.
    auto edges() const -> std::vector<ColoredEdge>;

    auto operator==(const ColoredMultigraph &) const -> bool = default;

private:
    int _n = 0;
    int _r = 1;
    std::vector<ColorMask> _masks;
    std::vector<int> _counts;
};

/// Checks loops, vertex and color ranges, and duplicate (u,v,c) triples.
void validate(int n, int r, std::span<const ColoredEdge> edges);
/// Re-checks the structural invariants of an existing graph.
void validate(const ColoredMultigraph & g);

/// 1-colored union of all color classes.
auto underlying_simple(const ColoredMultigraph & g) -> ColoredMultigraph;

/// Each vertex v becomes the independent class {v*s, ..., v*s+s-1}; each
/// color-c edge becomes a complete bipartite color-c graph between classes.
auto blow_up(const ColoredMultigraph & g, int s) -> ColoredMultigraph;

/// Applies a color permutation: color c becomes perm[c-1].
auto permute_colors(const ColoredMultigraph & g, std::span<const int> perm) -> ColoredMultigraph;
/// Vertex v becomes perm[v].
auto relabel_vertices(const ColoredMultigraph & g, std::span<const int> perm) -> ColoredMultigraph;
/// Subgraph induced on the listed vertices, renumbered in the given order.
auto induced_subgraph(const ColoredMultigraph & g, std::span<const int> vertices) -> ColoredMultigraph;

}
