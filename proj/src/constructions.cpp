#include "mextremal/constructions.hpp"
#include "mextremal/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace mextremal {

namespace
{
    void require(bool condition, const std::string & what)
    {
        if (! condition)
            fail(ErrorKind::InvalidArgument, what);
    }

    auto next_combination(std::vector<int> & idx, int t) -> bool
    {
        int s = static_cast<int>(idx.size());
        int i = s - 1;
        while (i >= 0 && idx[i] == t - s + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1 ; j < s ; ++j)
            idx[j] = idx[j - 1] + 1;
        return true;
    }

    auto first_combination(int s) -> std::vector<int>
    {
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        return idx;
    }

    auto derive_seed(std::uint64_t seed, int a, int b) -> std::uint64_t
    {
        std::seed_seq seq{ static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b) };
        std::uint32_t words[2];
        seq.generate(words, words + 2);
        return (std::uint64_t{ words[0] } << 32) | words[1];
    }

    auto bipartite_side(const ColoredMultigraph & gadget) -> int
    {
        if (gadget.n() == 0 || gadget.n() % 2 != 0)
            fail(ErrorKind::NotCompleteBipartite, "vertex count " + std::to_string(gadget.n()) + " is not 2t");
        int t = gadget.n() / 2;
        for (int u = 0 ; u < gadget.n() ; ++u)
            for (int v = u + 1 ; v < gadget.n() ; ++v) {
                bool cross = (u < t) != (v < t);
                if (cross && ! gadget.adjacent(u, v))
                    fail(ErrorKind::NotCompleteBipartite, "missing cross pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
                if (! cross && gadget.adjacent(u, v))
                    fail(ErrorKind::NotCompleteBipartite, "edge inside a side {" + std::to_string(u) + "," + std::to_string(v) + "}");
            }
        return t;
    }
}

auto turan_graph(int n, int parts) -> ColoredMultigraph
{
    require(parts >= 1 && parts <= n, "need 1 <= parts <= n, got parts=" + std::to_string(parts) + " n=" + std::to_string(n));
    std::vector<int> part(n);
    int base = n / parts, extra = n % parts, v = 0;
    for (int p = 0 ; p < parts ; ++p)
        for (int i = 0 ; i < base + (p < extra ? 1 : 0) ; ++i)
            part[v++] = p;

    ColoredMultigraph g{ n, 1 };
    for (int a = 0 ; a < n ; ++a)
        for (int b = a + 1 ; b < n ; ++b)
            if (part[a] != part[b])
                g.add_edge(a, b, 1);
    return g;
}

auto OneFactorization::color_of(int u, int v) const -> int
{
    auto key = std::minmax(u, v);
    for (int i = 0 ; i < static_cast<int>(classes.size()) ; ++i)
        for (auto [a, b] : classes[i])
            if (a == key.first && b == key.second)
                return i;
    return -1;
}

auto one_factorization(int r) -> OneFactorization
{
    if (r % 2 != 0)
        fail(ErrorKind::OddR, "r=" + std::to_string(r) + " is odd");
    require(r >= 2, "need r >= 2, got " + std::to_string(r));

    OneFactorization f;
    f.r = r;
    int ring = r - 1;
    for (int i = 0 ; i < ring ; ++i) {
        std::vector<std::pair<int, int>> matching;
        matching.emplace_back(i, r - 1);
        for (int j = 1 ; j < r / 2 ; ++j) {
            int a = (i + j) % ring, b = (i - j + ring) % ring;
            matching.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(matching.begin(), matching.end());
        f.classes.push_back(std::move(matching));
    }
    return f;
}

auto gadget_coloring(const GadgetSpec & spec) -> ColoredMultigraph
{
    require(spec.t >= 1, "gadget side must be positive");
    require(spec.s >= 1 && spec.s <= spec.t, "need 1 <= s <= t");
    ColoredMultigraph g{ 2 * spec.t, spec.r };
    std::mt19937_64 rng{ spec.seed };
    std::uniform_int_distribution<int> color{ 1, spec.r };
    for (int x = 0 ; x < spec.t ; ++x)
        for (int y = 0 ; y < spec.t ; ++y)
            g.add_edge(x, spec.t + y, color(rng));
    return g;
}

auto gadget_permutation_complement(int t) -> ColoredMultigraph
{
    require(t >= 1, "gadget side must be positive");
    ColoredMultigraph g{ 2 * t, 2 };
    for (int x = 0 ; x < t ; ++x)
        for (int y = 0 ; y < t ; ++y)
            g.add_edge(x, t + y, y == (x + 1) % t ? 2 : 1);
    return g;
}

auto gadget_monochrome(int t, int r) -> ColoredMultigraph
{
    require(t >= 1, "gadget side must be positive");
    ColoredMultigraph g{ 2 * t, r };
    for (int x = 0 ; x < t ; ++x)
        for (int y = 0 ; y < t ; ++y)
            g.add_edge(x, t + y, 1);
    return g;
}

auto gadget_checkerboard(int t) -> ColoredMultigraph
{
    require(t >= 1, "gadget side must be positive");
    ColoredMultigraph g{ 2 * t, 2 };
    for (int x = 0 ; x < t ; ++x)
        for (int y = 0 ; y < t ; ++y)
            g.add_edge(x, t + y, (x + y) % 2 == 0 ? 1 : 2);
    return g;
}

auto spans_all_colors(const ColoredMultigraph & gadget, const std::vector<int> & rows, const std::vector<int> & cols) -> bool
{
    int t = gadget.n() / 2;
    ColorMask seen = 0;
    for (int x : rows)
        for (int y : cols)
            seen |= gadget.colors(x, t + y);
    return seen == all_colors(gadget.r());
}

auto verify_gadget(const ColoredMultigraph & gadget, int s, std::optional<GadgetSampling> sampling) -> GadgetVerdict
{
    int t = bipartite_side(gadget);
    require(s >= 1 && s <= t, "need 1 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
    ColorMask full = all_colors(gadget.r());
    GadgetVerdict verdict;

    if (sampling) {
        std::mt19937_64 rng{ sampling->seed };
        std::vector<int> side(t);
        std::iota(side.begin(), side.end(), 0);
        for (long long trial = 0 ; trial < sampling->trials ; ++trial) {
            std::vector<int> rows, cols;
            std::sample(side.begin(), side.end(), std::back_inserter(rows), s, rng);
            std::sample(side.begin(), side.end(), std::back_inserter(cols), s, rng);
            ++verdict.checked;
            if (! spans_all_colors(gadget, rows, cols)) {
                verdict.pass = false;
                verdict.rows = std::move(rows);
                verdict.cols = std::move(cols);
                return verdict;
            }
        }
        return verdict;
    }

    double per_side = std::exp(std::lgamma(t + 1.0) - std::lgamma(s + 1.0) - std::lgamma(t - s + 1.0));
    if (per_side * per_side > exact_gadget_limit * (1 + 1e-9))
        fail(ErrorKind::ExactTooLarge, "C(" + std::to_string(t) + "," + std::to_string(s) + ")^2 exceeds the exact-mode limit; use sampling");

    auto rows = first_combination(s);
    std::vector<ColorMask> column_colors(t);
    do {
        for (int y = 0 ; y < t ; ++y) {
            column_colors[y] = 0;
            for (int x : rows)
                column_colors[y] |= gadget.colors(x, t + y);
        }
        auto cols = first_combination(s);
        do {
            ColorMask seen = 0;
            for (int y : cols)
                seen |= column_colors[y];
            ++verdict.checked;
            if (seen != full) {
                verdict.pass = false;
                verdict.rows = rows;
                verdict.cols = cols;
                return verdict;
            }
        } while (next_combination(cols, t));
    } while (next_combination(rows, t));
    return verdict;
}

auto gadget_subset_size_claim(int t, int r, int k) -> int
{
    return static_cast<int>(std::ceil(t / std::pow(static_cast<double>(r) * k, k)));
}

auto gadget_subset_size_proof(int t, int r, int k) -> int
{
    return static_cast<int>(std::ceil(t / std::pow(static_cast<double>(r) * k, 2)));
}

auto gadget_failure_bound(int r, int k, int t) -> double
{
    int s = gadget_subset_size_claim(t, r, k);
    double log_binom = std::lgamma(t + 1.0) - std::lgamma(s + 1.0) - std::lgamma(t - s + 1.0);
    double exponent = std::pow(static_cast<double>(t) / (static_cast<double>(r) * k), 2);
    if (r == 1)
        return 0.0;
    return std::exp(std::log(static_cast<double>(r)) + 2 * log_binom + exponent * std::log((r - 1.0) / r));
}

auto graph_H(int r, int k, int t, std::uint64_t seed) -> ColoredMultigraph
{
    require(k >= 2 && t >= 1, "need k >= 2 and t >= 1");
    ColoredMultigraph g{ k * t, r };
    for (int j = 0 ; j < k ; ++j)
        for (int j2 = j + 1 ; j2 < k ; ++j2) {
            auto gadget = gadget_coloring({ t, r, 1, derive_seed(seed, j, j2) });
            for (int a = 0 ; a < t ; ++a)
                for (int b = 0 ; b < t ; ++b)
                    g.set_colors(j * t + a, j2 * t + b, gadget.colors(a, t + b));
        }
    return g;
}

auto graph_H(int k, const ColoredMultigraph & gadget) -> ColoredMultigraph
{
    int t = bipartite_side(gadget);
    require(k >= 2, "need k >= 2");
    ColoredMultigraph g{ k * t, gadget.r() };
    for (int j = 0 ; j < k ; ++j)
        for (int j2 = j + 1 ; j2 < k ; ++j2)
            for (int a = 0 ; a < t ; ++a)
                for (int b = 0 ; b < t ; ++b)
                    g.set_colors(j * t + a, j2 * t + b, gadget.colors(a, t + b));
    return g;
}

auto graph_H_prime(const ColoredMultigraph & h, int m, int color) -> ColoredMultigraph
{
    require(m >= 1, "need m >= 1");
    if (color < 1 || color > h.r())
        fail(ErrorKind::ColorOutOfRange, "color " + std::to_string(color) + " with r=" + std::to_string(h.r()));
    int n = h.n() + 2 * m;
    ColoredMultigraph g{ n, h.r() };
    for (int u = 0 ; u < h.n() ; ++u)
        for (int v = u + 1 ; v < h.n() ; ++v)
            g.set_colors(u, v, h.colors(u, v));
    for (int u = h.n() ; u < n ; ++u)
        for (int v = 0 ; v < u ; ++v)
            g.add_edge(v, u, color);
    return g;
}

auto lower_bound_family(int r, int k, int m) -> ConstructionFamily
{
    auto factors = one_factorization(r);
    require(k >= 2 && m >= 1, "need k >= 2 and m >= 1");

    ConstructionFamily f;
    f.r = r;
    f.k = k;
    f.m = m;
    int n = (k - 1) * r * m;
    f.graph = ColoredMultigraph{ n, r };
    for (int a = 0 ; a < n ; ++a)
        for (int b = a + 1 ; b < n ; ++b) {
            auto p = f.coords(a), q = f.coords(b);
            ColorMask mask = all_colors(r);
            if (p.x == q.x) {
                if (p.y == q.y)
                    mask &= ~color_bit(r);
                else
                    mask &= ~color_bit(factors.color_of(p.y, q.y) + 1);
            }
            f.graph.set_colors(a, b, mask);
        }
    return f;
}

auto t1() -> ColoredMultigraph
{
    ColoredEdge edges[] = { { 0, 1, red }, { 0, 1, blue }, { 0, 2, red }, { 1, 2, red } };
    return ColoredMultigraph::from_edges(3, 2, edges);
}

auto t2() -> ColoredMultigraph
{
    ColoredEdge edges[] = { { 0, 1, red }, { 0, 1, blue }, { 0, 2, red }, { 1, 2, blue } };
    return ColoredMultigraph::from_edges(3, 2, edges);
}

auto cycle_pattern(int length, std::string_view word) -> ColoredMultigraph
{
    if (length < 3)
        fail(ErrorKind::InvalidArgument, "cycle length must be at least 3");
    if (static_cast<int>(word.size()) != length)
        fail(ErrorKind::LengthMismatch, "color word '" + std::string{ word } + "' has length " + std::to_string(word.size())
                + ", cycle has " + std::to_string(length));
    ColoredMultigraph g{ length, 2 };
    for (int i = 0 ; i < length ; ++i) {
        int c = 0;
        switch (word[i]) {
            case 'R': case 'r': c = red; break;
            case 'B': case 'b': c = blue; break;
            default:
                fail(ErrorKind::InvalidArgument, "color word may only contain R and B");
        }
        g.add_edge(std::min(i, (i + 1) % length), std::max(i, (i + 1) % length), c);
    }
    return g;
}

}
