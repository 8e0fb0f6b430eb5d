#include "mextremal/pipeline.hpp"
#include "mextremal/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace mextremal {

auto to_string(PartitionSource source) -> std::string_view
{
    switch (source) {
        case PartitionSource::Given: return "given";
        case PartitionSource::Exact: return "exact";
        case PartitionSource::Greedy: return "greedy";
    }
    return "unknown";
}

auto build_pprime(const PPrimeSpec & spec) -> ColoredMultigraph
{
    if (spec.k < 1)
        fail(ErrorKind::InvalidArgument, "k must be positive");
    if (spec.m() > (spec.k + 1) / 2)
        fail(ErrorKind::MatchingTooLarge, "m=" + std::to_string(spec.m()) + " exceeds (k+1)/2=" + std::to_string((spec.k + 1) / 2));
    for (int c : spec.matching_colors)
        if (c < 1 || c > spec.r)
            fail(ErrorKind::ColorOutOfRange, "matching color " + std::to_string(c) + " with r=" + std::to_string(spec.r));

    ColoredMultigraph g{ spec.k + 1, spec.r };
    for (int u = 0 ; u <= spec.k ; ++u)
        for (int v = u + 1 ; v <= spec.k ; ++v)
            g.set_colors(u, v, all_colors(spec.r));
    for (int j = 0 ; j < spec.m() ; ++j)
        g.set_colors(2 * j, 2 * j + 1, color_bit(spec.matching_colors[j]));
    return g;
}

auto multiplicity_r_core(const ColoredMultigraph & h) -> ColoredMultigraph
{
    ColoredMultigraph core{ h.n(), 1 };
    for (int u = 0 ; u < h.n() ; ++u)
        for (int v = u + 1 ; v < h.n() ; ++v)
            if (h.colors(u, v) == all_colors(h.r()))
                core.set_colors(u, v, color_bit(1));
    return core;
}

namespace
{
    using Adjacency = std::vector<std::vector<char>>;

    auto adjacency_of(const ColoredMultigraph & g) -> Adjacency
    {
        Adjacency adj(g.n(), std::vector<char>(g.n(), 0));
        for (int u = 0 ; u < g.n() ; ++u)
            for (int v = 0 ; v < g.n() ; ++v)
                adj[u][v] = g.adjacent(u, v) ? 1 : 0;
        return adj;
    }

    // First clique of the given size in lexicographic order.
    class CliqueFinder
    {
    public:
        CliqueFinder(const Adjacency & adj, int size) :
            _adj(adj),
            _size(size)
        {
        }

        auto run() -> std::optional<std::vector<int>>
        {
            std::vector<int> all(_adj.size());
            std::iota(all.begin(), all.end(), 0);
            if (grow(all))
                return _clique;
            return std::nullopt;
        }

    private:
        auto grow(const std::vector<int> & candidates) -> bool
        {
            if (static_cast<int>(_clique.size()) == _size)
                return true;
            for (std::size_t i = 0 ; i < candidates.size() ; ++i) {
                if (static_cast<int>(_clique.size() + candidates.size() - i) < _size)
                    return false;
                int v = candidates[i];
                std::vector<int> next;
                for (std::size_t j = i + 1 ; j < candidates.size() ; ++j)
                    if (_adj[v][candidates[j]])
                        next.push_back(candidates[j]);
                _clique.push_back(v);
                if (grow(next))
                    return true;
                _clique.pop_back();
            }
            return false;
        }

        const Adjacency & _adj;
        int _size;
        std::vector<int> _clique;
    };

    // Partition into at most k classes minimizing core edges inside classes;
    // first optimum in restricted-growth order.
    class ExactKPartition
    {
    public:
        ExactKPartition(const Adjacency & adj, int k) :
            _adj(adj),
            _k(k),
            _label(adj.size(), -1)
        {
        }

        auto run() -> std::vector<int>
        {
            _best_inside = -1;
            step(0, 0, 0);
            return _best;
        }

    private:
        void step(int v, int used, int inside)
        {
            if (_best_inside != -1 && inside >= _best_inside)
                return;
            int n = static_cast<int>(_adj.size());
            if (v == n) {
                _best_inside = inside;
                _best = _label;
                return;
            }
            for (int c = 0 ; c <= std::min(used, _k - 1) ; ++c) {
                int added = 0;
                for (int w = 0 ; w < v ; ++w)
                    if (_label[w] == c && _adj[v][w])
                        ++added;
                _label[v] = c;
                step(v + 1, std::max(used, c + 1), inside + added);
            }
            _label[v] = -1;
        }

        const Adjacency & _adj;
        int _k;
        std::vector<int> _label, _best;
        int _best_inside = -1;
    };

    auto greedy_k_partition(const Adjacency & adj, int k) -> std::vector<int>
    {
        int n = static_cast<int>(adj.size());
        std::vector<int> label(n);
        for (int v = 0 ; v < n ; ++v)
            label[v] = v % k;
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0 ; v < n ; ++v) {
                std::vector<int> inside(k, 0);
                for (int w = 0 ; w < n ; ++w)
                    if (w != v && adj[v][w])
                        ++inside[label[w]];
                int target = static_cast<int>(std::min_element(inside.begin(), inside.end()) - inside.begin());
                if (inside[target] < inside[label[v]]) {
                    label[v] = target;
                    improved = true;
                }
            }
        }
        return label;
    }

    struct Cut
    {
        std::vector<int> side;
        int crossing = 0;
        bool exact = true;
    };

    // Max cut of the color-c graph inside one part. Exact by enumeration for
    // small parts (first vertex pinned to side 0), greedy plus single-vertex
    // flips otherwise.
    auto max_cut(const ColoredMultigraph & h, const std::vector<int> & part, int c) -> Cut
    {
        int s = static_cast<int>(part.size());
        auto edge = [&] (int a, int b) { return h.has_edge(part[a], part[b], c); };
        Cut cut;
        if (s <= 1)
            return cut;

        std::vector<int> side(s, 0);
        auto crossing = [&] (const std::vector<int> & sd) {
            int count = 0;
            for (int a = 0 ; a < s ; ++a)
                for (int b = a + 1 ; b < s ; ++b)
                    if (sd[a] != sd[b] && edge(a, b))
                        ++count;
            return count;
        };

        if (s <= exact_cut_limit) {
            std::vector<std::uint32_t> row(s, 0);
            for (int a = 0 ; a < s ; ++a)
                for (int b = 0 ; b < s ; ++b)
                    if (a != b && edge(a, b))
                        row[a] |= std::uint32_t{ 1 } << b;
            std::uint32_t best_mask = 0;
            int best = -1;
            std::uint32_t limit = std::uint32_t{ 1 } << (s - 1);
            for (std::uint32_t half = 0 ; half < limit ; ++half) {
                std::uint32_t mask = half << 1;
                int value = 0;
                for (int a = 0 ; a < s ; ++a)
                    if (mask & (std::uint32_t{ 1 } << a))
                        value += std::popcount(row[a] & ~mask);
                if (value > best) {
                    best = value;
                    best_mask = mask;
                }
            }
            for (int a = 0 ; a < s ; ++a)
                side[a] = (best_mask >> a) & 1;
        }
        else {
            cut.exact = false;
            for (int a = 1 ; a < s ; ++a) {
                int toward[2] = { 0, 0 };
                for (int b = 0 ; b < a ; ++b)
                    if (edge(a, b))
                        ++toward[side[b]];
                side[a] = toward[0] >= toward[1] ? 1 : 0;
            }
            bool improved = true;
            while (improved) {
                improved = false;
                for (int a = 0 ; a < s ; ++a) {
                    int same = 0, other = 0;
                    for (int b = 0 ; b < s ; ++b)
                        if (b != a && edge(a, b))
                            ++(side[a] == side[b] ? same : other);
                    if (same > other) {
                        side[a] ^= 1;
                        improved = true;
                    }
                }
            }
        }

        cut.crossing = crossing(side);
        for (int a = 0 ; a < s ; ++a)
            if (side[a] == 0)
                cut.side.push_back(part[a]);
        return cut;
    }

    auto round_seed(std::uint64_t seed, int round) -> std::uint64_t
    {
        std::seed_seq seq{ static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(round) };
        std::uint32_t words[2];
        seq.generate(words, words + 2);
        return (std::uint64_t{ words[0] } << 32) | words[1];
    }

    auto identity_embedding(const std::vector<int> & clique) -> Embedding
    {
        return Embedding{ clique };
    }
}

auto find_pprime(const ColoredMultigraph & h, const PPrimeSpec & spec, const PipelineOptions & options) -> PipelineResult
{
    auto pprime = build_pprime(spec);
    if (h.r() != spec.r)
        fail(ErrorKind::ColorCountMismatch, "host has r=" + std::to_string(h.r()) + ", P' has r=" + std::to_string(spec.r));

    int n = h.n(), k = spec.k, m = spec.m();
    auto core = multiplicity_r_core(h);
    auto core_adj = adjacency_of(core);

    PipelineResult result;
    auto & trace = result.trace;
    trace.core_edges = core.total_edges();

    // partite sets V_1..V_k (possibly empty)
    std::vector<int> label;
    if (options.partition) {
        const auto & p = *options.partition;
        if (! is_partition_of(p, n) || p.size() != k)
            fail(ErrorKind::PartitionNotProperForCore, "expected a partition of " + std::to_string(n) + " vertices into "
                    + std::to_string(k) + " classes");
        label = p.labels(n);
        trace.source = PartitionSource::Given;
    }
    else if (n <= exact_partition_limit) {
        ExactKPartition solver{ core_adj, k };
        label = solver.run();
        trace.source = PartitionSource::Exact;
    }
    else {
        label = greedy_k_partition(core_adj, k);
        trace.source = PartitionSource::Greedy;
    }
    trace.parts.assign(k, {});
    for (int v = 0 ; v < n ; ++v)
        trace.parts[label[v]].push_back(v);

    Adjacency kept(n, std::vector<char>(n, 0));
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (core_adj[u][v] && label[u] != label[v]) {
                kept[u][v] = kept[v][u] = 1;
                ++trace.kept_core_edges;
            }

    auto binom_n2 = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (int j = 0 ; j < m ; ++j) {
        int c = spec.matching_colors[j];
        int inside = 0;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (label[u] == label[v] && h.has_edge(u, v, c))
                    ++inside;
        ColorStatistic stat;
        stat.color = c;
        stat.expected_edges = Rational{ inside, k };
        stat.density_lower_bound = Rational{ 1, k }
            * (Rational{ spec.r - 1, std::int64_t{ spec.r } * k } - Rational{ m, 9 * std::int64_t{ spec.r } * k * k }) * binom_n2;
        trace.statistics.push_back(stat);
    }

    if (auto clique = CliqueFinder{ core_adj, k + 1 }.run()) {
        trace.direct_clique = true;
        result.embedding = identity_embedding(*clique);
        return result;
    }

    std::vector<long long> fj_totals(m, 0);
    for (int round = 0 ; round < options.rounds ; ++round) {
        RoundTrace rt;
        rt.round = round;
        rt.kept_core_edges = trace.kept_core_edges;
        rt.permutation.resize(k);
        std::iota(rt.permutation.begin(), rt.permutation.end(), 0);
        std::mt19937_64 rng{ round_seed(options.seed, round) };
        std::shuffle(rt.permutation.begin(), rt.permutation.end(), rng);

        Adjacency hprime = kept;
        rt.hprime_edges = trace.kept_core_edges;
        for (int j = 0 ; j < m ; ++j) {
            int part = rt.permutation[j];
            int c = spec.matching_colors[j];
            const auto & members = trace.parts[part];
            auto cut = max_cut(h, members, c);

            CutTrace ct;
            ct.part = part;
            ct.color = c;
            ct.exact = cut.exact;
            ct.side = cut.side;
            std::vector<char> on_first(n, 0);
            for (int v : cut.side)
                on_first[v] = 1;
            for (std::size_t a = 0 ; a < members.size() ; ++a)
                for (std::size_t b = a + 1 ; b < members.size() ; ++b) {
                    int u = members[a], v = members[b];
                    if (! h.has_edge(u, v, c))
                        continue;
                    ++ct.edges;
                    if (on_first[u] != on_first[v]) {
                        ++ct.cut_edges;
                        hprime[u][v] = hprime[v][u] = 1;
                    }
                }
            rt.hprime_edges += ct.cut_edges;
            fj_totals[j] += ct.edges;
            rt.cuts.push_back(std::move(ct));
        }

        rt.clique = CliqueFinder{ hprime, k + 1 }.run();
        bool success = rt.clique.has_value();
        if (success) {
            // intra-part clique pairs come from the cuts and form a matching;
            // P' matching pair j goes onto the pair drawn from part pi(j)
            const auto & q = *rt.clique;
            Embedding e{ std::vector<int>(k + 1, -1) };
            std::vector<char> taken(q.size(), 0);
            for (int j = 0 ; j < m ; ++j) {
                std::vector<int> hits;
                for (std::size_t i = 0 ; i < q.size() ; ++i)
                    if (label[q[i]] == rt.permutation[j])
                        hits.push_back(static_cast<int>(i));
                if (hits.size() == 2) {
                    e.map[2 * j] = q[hits[0]];
                    e.map[2 * j + 1] = q[hits[1]];
                    taken[hits[0]] = taken[hits[1]] = 1;
                }
            }
            std::size_t next = 0;
            for (int p = 0 ; p <= k ; ++p) {
                if (e.map[p] != -1)
                    continue;
                while (taken[next])
                    ++next;
                e.map[p] = q[next];
                taken[next] = 1;
            }
            if (! is_valid_embedding(h, pprime, e))
                throw std::logic_error("pipeline produced an embedding that does not verify");
            result.embedding = std::move(e);
        }
        trace.rounds.push_back(std::move(rt));
        if (success)
            break;
    }

    for (int j = 0 ; j < m ; ++j)
        if (! trace.rounds.empty())
            trace.statistics[j].empirical_mean = static_cast<double>(fj_totals[j]) / static_cast<double>(trace.rounds.size());
    return result;
}

}
