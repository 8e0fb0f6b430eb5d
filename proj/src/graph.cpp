#include "mextremal/graph.hpp"
#include "mextremal/error.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

namespace mextremal {

namespace
{
    auto pair_name(int u, int v) -> std::string
    {
        return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
    }

    void check_shape(int n, int r)
    {
        if (n < 0)
            fail(ErrorKind::InvalidArgument, "negative vertex count " + std::to_string(n));
        if (r < 1 || r > max_colors)
            fail(ErrorKind::ColorOutOfRange, "color count " + std::to_string(r) + " outside 1.." + std::to_string(max_colors));
    }

    void check_edge(int n, int r, int u, int v, int c)
    {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::VertexOutOfRange, "pair " + pair_name(u, v) + " with n=" + std::to_string(n));
        if (u == v)
            fail(ErrorKind::Loop, "pair " + pair_name(u, v));
        if (c < 1 || c > r)
            fail(ErrorKind::ColorOutOfRange, "color " + std::to_string(c) + " on pair " + pair_name(u, v) + " with r=" + std::to_string(r));
    }
}

ColoredMultigraph::ColoredMultigraph(int n, int r) :
    _n(n),
    _r(r)
{
    check_shape(n, r);
    _masks.assign(static_cast<std::size_t>(n) * n, 0);
    _counts.assign(r, 0);
}

auto ColoredMultigraph::from_edges(int n, int r, std::span<const ColoredEdge> edges) -> ColoredMultigraph
{
    validate(n, r, edges);
    ColoredMultigraph g{ n, r };
    for (const auto & e : edges)
        g.add_edge(e.u, e.v, e.color);
    return g;
}

void ColoredMultigraph::add_edge(int u, int v, int c)
{
    check_edge(_n, _r, u, v, c);
    if (has_edge(u, v, c))
        fail(ErrorKind::DuplicateEdge, "color " + std::to_string(c) + " on pair " + pair_name(u, v));
    set_colors(u, v, colors(u, v) | color_bit(c));
}

void ColoredMultigraph::set_colors(int u, int v, ColorMask mask)
{
    if (u < 0 || v < 0 || u >= _n || v >= _n)
        fail(ErrorKind::VertexOutOfRange, "pair " + pair_name(u, v) + " with n=" + std::to_string(_n));
    if (u == v) {
        if (mask != 0)
            fail(ErrorKind::Loop, "pair " + pair_name(u, v));
        return;
    }
    if ((mask & ~all_colors(_r)) != 0)
        fail(ErrorKind::ColorOutOfRange, "mask on pair " + pair_name(u, v) + " exceeds r=" + std::to_string(_r));

    ColorMask old = colors(u, v);
    for (int c = 1 ; c <= _r ; ++c) {
        if ((old & color_bit(c)) && ! (mask & color_bit(c)))
            --_counts[c - 1];
        else if (! (old & color_bit(c)) && (mask & color_bit(c)))
            ++_counts[c - 1];
    }
    _masks[static_cast<std::size_t>(u) * _n + v] = mask;
    _masks[static_cast<std::size_t>(v) * _n + u] = mask;
}

auto ColoredMultigraph::total_edges() const -> int
{
    int total = 0;
    for (int c : _counts)
        total += c;
    return total;
}

auto ColoredMultigraph::pair_count() const -> int
{
    int count = 0;
    for (int u = 0 ; u < _n ; ++u)
        for (int v = u + 1 ; v < _n ; ++v)
            if (adjacent(u, v))
                ++count;
    return count;
}

auto ColoredMultigraph::color_degree(int v, int c) const -> int
{
    int d = 0;
    for (int w = 0 ; w < _n ; ++w)
        if (has_edge(v, w, c))
            ++d;
    return d;
}

auto ColoredMultigraph::degree(int v) const -> int
{
    int d = 0;
    for (int w = 0 ; w < _n ; ++w)
        d += multiplicity(colors(v, w));
    return d;
}

auto ColoredMultigraph::edges() const -> std::vector<ColoredEdge>
{
    std::vector<ColoredEdge> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v = u + 1 ; v < _n ; ++v)
            for (int c = 1 ; c <= _r ; ++c)
                if (has_edge(u, v, c))
                    result.push_back({ u, v, c });
    return result;
}

void validate(int n, int r, std::span<const ColoredEdge> edges)
{
    check_shape(n, r);
    std::set<std::tuple<int, int, int>> seen;
    for (const auto & e : edges) {
        check_edge(n, r, e.u, e.v, e.color);
        auto key = std::tuple{ std::min(e.u, e.v), std::max(e.u, e.v), e.color };
        if (! seen.insert(key).second)
            fail(ErrorKind::DuplicateEdge, "color " + std::to_string(e.color) + " on pair " + pair_name(e.u, e.v));
    }
}

void validate(const ColoredMultigraph & g)
{
    check_shape(g.n(), g.r());
    for (int u = 0 ; u < g.n() ; ++u) {
        if (g.colors(u, u) != 0)
            fail(ErrorKind::Loop, "pair " + pair_name(u, u));
        for (int v = u + 1 ; v < g.n() ; ++v) {
            if (g.colors(u, v) != g.colors(v, u))
                fail(ErrorKind::InvalidArgument, "asymmetric pair " + pair_name(u, v));
            if ((g.colors(u, v) & ~all_colors(g.r())) != 0)
                fail(ErrorKind::ColorOutOfRange, "pair " + pair_name(u, v));
        }
    }
}

auto underlying_simple(const ColoredMultigraph & g) -> ColoredMultigraph
{
    ColoredMultigraph result{ g.n(), 1 };
    for (int u = 0 ; u < g.n() ; ++u)
        for (int v = u + 1 ; v < g.n() ; ++v)
            if (g.adjacent(u, v))
                result.set_colors(u, v, color_bit(1));
    return result;
}

auto blow_up(const ColoredMultigraph & g, int s) -> ColoredMultigraph
{
    if (s < 1)
        fail(ErrorKind::InvalidArgument, "blow-up size must be positive, got " + std::to_string(s));
    ColoredMultigraph result{ g.n() * s, g.r() };
    for (int u = 0 ; u < g.n() ; ++u)
        for (int v = u + 1 ; v < g.n() ; ++v) {
            ColorMask m = g.colors(u, v);
            if (m == 0)
                continue;
            for (int i = 0 ; i < s ; ++i)
                for (int j = 0 ; j < s ; ++j)
                    result.set_colors(u * s + i, v * s + j, m);
        }
    return result;
}

auto permute_colors(const ColoredMultigraph & g, std::span<const int> perm) -> ColoredMultigraph
{
    if (static_cast<int>(perm.size()) != g.r())
        fail(ErrorKind::ColorCountMismatch, "color permutation has wrong length");
    ColoredMultigraph result{ g.n(), g.r() };
    for (const auto & e : g.edges())
        result.add_edge(e.u, e.v, perm[e.color - 1]);
    return result;
}

auto relabel_vertices(const ColoredMultigraph & g, std::span<const int> perm) -> ColoredMultigraph
{
    if (static_cast<int>(perm.size()) != g.n())
        fail(ErrorKind::InvalidArgument, "vertex permutation has wrong length");
    ColoredMultigraph result{ g.n(), g.r() };
    for (int u = 0 ; u < g.n() ; ++u)
        for (int v = u + 1 ; v < g.n() ; ++v)
            result.set_colors(perm[u], perm[v], g.colors(u, v));
    return result;
}

auto induced_subgraph(const ColoredMultigraph & g, std::span<const int> vertices) -> ColoredMultigraph
{
    int k = static_cast<int>(vertices.size());
    ColoredMultigraph result{ k, g.r() };
    for (int i = 0 ; i < k ; ++i)
        for (int j = i + 1 ; j < k ; ++j)
            result.set_colors(i, j, g.colors(vertices[i], vertices[j]));
    return result;
}

}
