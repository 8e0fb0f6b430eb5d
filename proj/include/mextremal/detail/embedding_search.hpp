#pragma once

#include "mextremal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mextremal::detail {

enum class OrderPolicy {
    /// Descending total degree, ties by index.
    DegreeDescending,
    /// Most edges back to already-placed vertices first, then degree.
    Connected,
};

/// A pattern preprocessed into a fixed search order.
struct PatternPlan
{
    int size = 0;
    int r = 1;
    std::vector<int> order;
    /// For position i: (earlier position, required colors).
    std::vector<std::vector<std::pair<int, ColorMask>>> back;
    /// color_degrees[i][c-1] for the vertex at position i.
    std::vector<std::vector<int>> color_degrees;
};

inline auto make_plan(const ColoredMultigraph & pattern, std::span<const int> prefix, OrderPolicy policy) -> PatternPlan
{
    PatternPlan plan;
    plan.size = pattern.n();
    plan.r = pattern.r();

    std::vector<int> degree(pattern.n());
    for (int v = 0 ; v < pattern.n() ; ++v)
        degree[v] = pattern.degree(v);

    std::vector<char> placed(pattern.n(), 0);
    for (int v : prefix) {
        plan.order.push_back(v);
        placed[v] = 1;
    }

    if (policy == OrderPolicy::DegreeDescending) {
        std::vector<int> rest;
        for (int v = 0 ; v < pattern.n() ; ++v)
            if (! placed[v])
                rest.push_back(v);
        std::stable_sort(rest.begin(), rest.end(), [&] (int a, int b) { return degree[a] > degree[b]; });
        plan.order.insert(plan.order.end(), rest.begin(), rest.end());
    }
    else {
        while (static_cast<int>(plan.order.size()) < pattern.n()) {
            int best = -1, best_links = -1;
            for (int v = 0 ; v < pattern.n() ; ++v) {
                if (placed[v])
                    continue;
                int links = 0;
                for (int w : plan.order)
                    links += pattern.adjacent(v, w) ? 1 : 0;
                if (best == -1 || links > best_links || (links == best_links && degree[v] > degree[best])) {
                    best = v;
                    best_links = links;
                }
            }
            plan.order.push_back(best);
            placed[best] = 1;
        }
    }

    plan.back.resize(plan.size);
    plan.color_degrees.resize(plan.size);
    for (int i = 0 ; i < plan.size ; ++i) {
        int p = plan.order[i];
        for (int j = 0 ; j < i ; ++j)
            if (ColorMask m = pattern.colors(p, plan.order[j]) ; m != 0)
                plan.back[i].emplace_back(j, m);
        for (int c = 1 ; c <= pattern.r() ; ++c)
            plan.color_degrees[i].push_back(pattern.color_degree(p, c));
    }
    return plan;
}

/// Backtracking over the plan order. Host must provide n(), colors(u,v) and
/// color_degree(v,c). Candidates are tried in increasing host index, so the
/// first result is the lexicographically least map read along the plan order.
template <class Host>
class EmbeddingSearch
{
public:
    EmbeddingSearch(const PatternPlan & plan, const Host & host, bool injective) :
        _plan(plan),
        _host(host),
        _injective(injective),
        _image(plan.size, -1),
        _used(host.n(), 0)
    {
    }

    /// Searches with the first prefix.size() plan positions pinned to the
    /// given host vertices. Returns the image indexed by pattern vertex.
    auto run(std::span<const int> prefix = {}) -> std::optional<std::vector<int>>
    {
        std::fill(_image.begin(), _image.end(), -1);
        std::fill(_used.begin(), _used.end(), 0);
        if (_injective && _plan.size > _host.n())
            return std::nullopt;
        if (_plan.size > 0 && _host.n() == 0)
            return std::nullopt;

        int depth = 0;
        for (int h : prefix) {
            if (! feasible(depth, h))
                return std::nullopt;
            place(depth, h);
            ++depth;
        }

        if (! extend(depth))
            return std::nullopt;

        std::vector<int> result(_plan.size);
        for (int i = 0 ; i < _plan.size ; ++i)
            result[_plan.order[i]] = _image[i];
        return result;
    }

    auto nodes() const -> long long { return _nodes; }

private:
    auto feasible(int depth, int h) const -> bool
    {
        if (_injective) {
            if (_used[h])
                return false;
            for (int c = 1 ; c <= _plan.r ; ++c)
                if (_host.color_degree(h, c) < _plan.color_degrees[depth][c - 1])
                    return false;
        }
        for (auto [j, mask] : _plan.back[depth])
            if ((_host.colors(_image[j], h) & mask) != mask)
                return false;
        return true;
    }

    void place(int depth, int h)
    {
        _image[depth] = h;
        if (_injective)
            _used[h] = 1;
    }

    void unplace(int depth)
    {
        if (_injective)
            _used[_image[depth]] = 0;
        _image[depth] = -1;
    }

    auto extend(int depth) -> bool
    {
        ++_nodes;
        if (depth == _plan.size)
            return true;
        for (int h = 0 ; h < _host.n() ; ++h) {
            if (! feasible(depth, h))
                continue;
            place(depth, h);
            if (extend(depth + 1))
                return true;
            unplace(depth);
        }
        return false;
    }

    const PatternPlan & _plan;
    const Host & _host;
    bool _injective;
    std::vector<int> _image;
    std::vector<char> _used;
    long long _nodes = 0;
};

/// Host adapter over a complete graph with a cached color-degree table.
class GraphHost
{
public:
    explicit GraphHost(const ColoredMultigraph & g) :
        _g(g),
        _degrees(static_cast<std::size_t>(g.n()) * g.r(), 0)
    {
        for (int v = 0 ; v < g.n() ; ++v)
            for (int c = 1 ; c <= g.r() ; ++c)
                _degrees[static_cast<std::size_t>(v) * g.r() + c - 1] = g.color_degree(v, c);
    }

    auto n() const -> int { return _g.n(); }
    auto colors(int u, int v) const -> ColorMask { return _g.colors(u, v); }
    auto color_degree(int v, int c) const -> int { return _degrees[static_cast<std::size_t>(v) * _g.r() + c - 1]; }

private:
    const ColoredMultigraph & _g;
    std::vector<int> _degrees;
};

}
