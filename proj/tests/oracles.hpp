#pragma once

// Brute-force reference implementations. They share only the graph container
// with the library and deliberately avoid its search code.

#include "mextremal/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <vector>

namespace oracle {

using mextremal::ColoredMultigraph;
using mextremal::ColorMask;

inline auto maps_colors(const ColoredMultigraph & from, const ColoredMultigraph & to, const std::vector<int> & f) -> bool
{
    for (int u = 0 ; u < from.n() ; ++u)
        for (int v = u + 1 ; v < from.n() ; ++v) {
            ColorMask m = from.colors(u, v);
            if (m != 0 && (to.colors(f[u], f[v]) & m) != m)
                return false;
        }
    return true;
}

/// Every injective map, by recursion over pattern vertices.
inline auto contains(const ColoredMultigraph & host, const ColoredMultigraph & pattern) -> bool
{
    if (pattern.n() > host.n())
        return false;
    std::vector<int> f(pattern.n(), -1);
    std::vector<char> used(host.n(), 0);
    std::function<bool (int)> go = [&] (int i) -> bool {
        if (i == pattern.n())
            return maps_colors(pattern, host, f);
        for (int h = 0 ; h < host.n() ; ++h) {
            if (used[h])
                continue;
            used[h] = 1;
            f[i] = h;
            if (go(i + 1))
                return true;
            used[h] = 0;
        }
        return false;
    };
    return go(0);
}

/// Every map pattern -> target, counted as a base-|target| number.
inline auto hom(const ColoredMultigraph & pattern, const ColoredMultigraph & target) -> bool
{
    int n = pattern.n(), t = target.n();
    if (n == 0)
        return true;
    if (t == 0)
        return false;
    std::vector<int> f(n, 0);
    while (true) {
        if (maps_colors(pattern, target, f))
            return true;
        int i = 0;
        while (i < n && ++f[i] == t)
            f[i++] = 0;
        if (i == n)
            return false;
    }
}

inline auto proper_labeling(const ColoredMultigraph & g, const std::vector<int> & label) -> bool
{
    for (int u = 0 ; u < g.n() ; ++u)
        for (int v = u + 1 ; v < g.n() ; ++v)
            if (g.adjacent(u, v) && label[u] == label[v])
                return false;
    return true;
}

/// Calls visit on every labeling 0..k-1 of the vertices.
inline void for_each_labeling(int n, int k, const std::function<void (const std::vector<int> &)> & visit)
{
    std::vector<int> label(n, 0);
    if (n == 0) {
        visit(label);
        return;
    }
    while (true) {
        visit(label);
        int i = 0;
        while (i < n && ++label[i] == k)
            label[i++] = 0;
        if (i == n)
            return;
    }
}

inline auto chromatic_number(const ColoredMultigraph & g) -> int
{
    for (int k = 1 ; k <= g.n() ; ++k) {
        bool found = false;
        for_each_labeling(g.n(), k, [&] (const std::vector<int> & label) {
            found = found || proper_labeling(g, label);
        });
        if (found)
            return k;
    }
    return g.n();
}

/// Number of partitions into exactly k independent classes: surjective
/// proper labelings divided by k!.
inline auto count_partitions(const ColoredMultigraph & g, int k) -> long long
{
    long long labelings = 0;
    for_each_labeling(g.n(), k, [&] (const std::vector<int> & label) {
        std::set<int> used(label.begin(), label.end());
        if (static_cast<int>(used.size()) == k && proper_labeling(g, label))
            ++labelings;
    });
    long long factorial = 1;
    for (int i = 2 ; i <= k ; ++i)
        factorial *= i;
    return labelings / factorial;
}

/// Reduced maximum matching by enumerating every labeled chi-coloring,
/// building the class-pair color sets directly and trying every subset of
/// multiplicity-one class pairs.
inline auto reduced_max_matching(const ColoredMultigraph & g) -> int
{
    int chi = chromatic_number(g);
    int best = 0;
    for_each_labeling(g.n(), chi, [&] (const std::vector<int> & label) {
        if (! proper_labeling(g, label))
            return;
        std::vector<ColorMask> between(chi * chi, 0);
        for (int u = 0 ; u < g.n() ; ++u)
            for (int v = 0 ; v < g.n() ; ++v)
                between[label[u] * chi + label[v]] |= g.colors(u, v);
        std::vector<std::pair<int, int>> single;
        for (int x = 0 ; x < chi ; ++x)
            for (int y = x + 1 ; y < chi ; ++y)
                if (std::popcount(between[x * chi + y]) == 1)
                    single.emplace_back(x, y);
        int count = static_cast<int>(single.size());
        for (long long subset = 0 ; subset < (1LL << count) ; ++subset) {
            std::vector<char> hit(chi, 0);
            bool disjoint = true;
            int size = 0;
            for (int i = 0 ; i < count && disjoint ; ++i)
                if (subset >> i & 1) {
                    auto [x, y] = single[i];
                    if (hit[x] || hit[y])
                        disjoint = false;
                    hit[x] = hit[y] = 1;
                    ++size;
                }
            if (disjoint)
                best = std::max(best, size);
        }
    });
    return best;
}

struct ExtremalValues
{
    int mex = 0;
    int max_total = 0;
};

/// Enumerates all (2^r)^C(n,2) multigraphs on n vertices.
inline auto extremal(int n, int r, std::span<const ColoredMultigraph> patterns) -> ExtremalValues
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            pairs.emplace_back(u, v);
    int base = 1 << r;
    std::vector<int> digit(pairs.size(), 0);
    ExtremalValues best;
    while (true) {
        ColoredMultigraph g{ n, r };
        for (std::size_t i = 0 ; i < pairs.size() ; ++i)
            g.set_colors(pairs[i].first, pairs[i].second, static_cast<ColorMask>(digit[i]));
        int low = g.edge_count(1);
        for (int c = 2 ; c <= r ; ++c)
            low = std::min(low, g.edge_count(c));
        if (low > best.mex || g.total_edges() > best.max_total) {
            bool avoids = std::none_of(patterns.begin(), patterns.end(), [&] (const auto & p) { return contains(g, p); });
            if (avoids) {
                best.mex = std::max(best.mex, low);
                best.max_total = std::max(best.max_total, g.total_edges());
            }
        }
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == base)
            digit[i++] = 0;
        if (i == digit.size())
            break;
    }
    return best;
}

}
