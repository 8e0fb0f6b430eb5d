#include "mextremal/extremal.hpp"
#include "mextremal/detail/embedding_search.hpp"
#include "mextremal/error.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <memory>
#include <string>
#include <thread>

namespace mextremal {

auto default_thread_count() -> int
{
    if (const char * env = std::getenv("MEXTREMAL_THREADS")) {
        int value = std::atoi(env);
        if (value > 0)
            return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace
{
    // Host view over a partially assigned multigraph; unassigned pairs carry no
    // colors, so any copy found here survives every completion.
    class PartialHost
    {
    public:
        PartialHost(int n, int r) :
            _n(n),
            _r(r),
            _masks(static_cast<std::size_t>(n) * n, 0),
            _degrees(static_cast<std::size_t>(n) * r, 0)
        {
        }

        auto n() const -> int { return _n; }
        auto colors(int u, int v) const -> ColorMask { return _masks[static_cast<std::size_t>(u) * _n + v]; }
        auto color_degree(int v, int c) const -> int { return _degrees[static_cast<std::size_t>(v) * _r + c - 1]; }

        void set(int u, int v, ColorMask mask, int delta)
        {
            _masks[static_cast<std::size_t>(u) * _n + v] = delta > 0 ? mask : 0;
            _masks[static_cast<std::size_t>(v) * _n + u] = delta > 0 ? mask : 0;
            for (int c = 1 ; c <= _r ; ++c)
                if (mask & color_bit(c)) {
                    _degrees[static_cast<std::size_t>(u) * _r + c - 1] += delta;
                    _degrees[static_cast<std::size_t>(v) * _r + c - 1] += delta;
                }
        }

        /// Lexicographic comparison of the color-degree vectors of a and b.
        auto compare_degrees(int a, int b) const -> int
        {
            for (int c = 1 ; c <= _r ; ++c) {
                int da = color_degree(a, c), db = color_degree(b, c);
                if (da != db)
                    return da < db ? -1 : 1;
            }
            return 0;
        }

        auto to_graph() const -> ColoredMultigraph
        {
            ColoredMultigraph g{ _n, _r };
            for (int u = 0 ; u < _n ; ++u)
                for (int v = u + 1 ; v < _n ; ++v)
                    g.set_colors(u, v, colors(u, v));
            return g;
        }

    private:
        int _n, _r;
        std::vector<ColorMask> _masks;
        std::vector<int> _degrees;
    };

    // One plan per oriented pattern edge (a,b), with a and b placed first.
    struct EdgePlan
    {
        ColorMask required;
        detail::PatternPlan plan;
    };

    auto make_edge_plans(std::span<const ColoredMultigraph> patterns) -> std::vector<EdgePlan>
    {
        std::vector<EdgePlan> plans;
        for (const auto & p : patterns)
            for (int a = 0 ; a < p.n() ; ++a)
                for (int b = 0 ; b < p.n() ; ++b)
                    if (a != b && p.adjacent(a, b)) {
                        int prefix[2] = { a, b };
                        plans.push_back({ p.colors(a, b), detail::make_plan(p, prefix, detail::OrderPolicy::Connected) });
                    }
        return plans;
    }

    struct Shared
    {
        std::atomic<long long> nodes{ 0 };
        std::atomic<bool> budget_hit{ false };
        // decision: least task index that found a witness
        std::atomic<int> first_success{ INT_MAX };
        // optimization: best value found by any task
        std::atomic<int> incumbent{ -1 };
    };

    struct Problem
    {
        int n = 0;
        int r = 1;
        Objective objective = Objective::MaxMinColorClass;
        std::vector<int> thresholds;
        SearchOptions options;
        std::vector<std::pair<int, int>> pairs;
        std::vector<EdgePlan> edge_plans;
    };

    struct TaskOutcome
    {
        bool found = false;
        int value = -1;
        std::optional<ColoredMultigraph> witness;
    };

    class Searcher
    {
    public:
        Searcher(const Problem & problem, Shared & shared, int task) :
            _pb(problem),
            _shared(shared),
            _task(task),
            _host(problem.n, problem.r),
            _counts(problem.r, 0)
        {
            for (const auto & ep : problem.edge_plans)
                _engines.push_back(std::make_unique<detail::EmbeddingSearch<PartialHost>>(ep.plan, _host, true));
        }

        auto run(std::span<const ColorMask> prefix) -> TaskOutcome
        {
            int p = 0;
            for (ColorMask mask : prefix) {
                bool ok = assign(p, mask);
                if (! ok)
                    return _outcome;
                ++p;
            }
            dfs(p);
            return _outcome;
        }

    private:
        auto total() const -> int
        {
            int t = 0;
            for (int c : _counts)
                t += c;
            return t;
        }

        auto cancelled() const -> bool
        {
            if (_shared.budget_hit.load(std::memory_order_relaxed))
                return true;
            return _pb.objective == Objective::MaxMinColorClass
                && _shared.first_success.load(std::memory_order_relaxed) < _task;
        }

        auto count_node() -> bool
        {
            long long seen = _shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            if (_pb.options.max_nodes > 0 && seen > _pb.options.max_nodes) {
                _shared.budget_hit.store(true);
                return false;
            }
            return true;
        }

        // Applies mask to pair p and reports whether the branch survives.
        auto assign(int p, ColorMask mask) -> bool
        {
            auto [u, v] = _pb.pairs[p];
            _host.set(u, v, mask, +1);
            for (int c = 1 ; c <= _pb.r ; ++c)
                if (mask & color_bit(c))
                    ++_counts[c - 1];
            return survives(p, mask);
        }

        void unassign(int p, ColorMask mask)
        {
            auto [u, v] = _pb.pairs[p];
            _host.set(u, v, mask, -1);
            for (int c = 1 ; c <= _pb.r ; ++c)
                if (mask & color_bit(c))
                    --_counts[c - 1];
        }

        auto survives(int p, ColorMask mask) -> bool
        {
            int remaining = static_cast<int>(_pb.pairs.size()) - p - 1;

            if (_pb.objective == Objective::MaxMinColorClass) {
                for (int c = 0 ; c < _pb.r ; ++c)
                    if (_counts[c] + remaining < _pb.thresholds[c])
                        return false;
            }
            else {
                int bound = total() + _pb.r * remaining;
                if (bound <= _local_best || bound < _shared.incumbent.load(std::memory_order_relaxed))
                    return false;
            }

            if (_pb.options.symmetry_breaking && ! canonical_so_far(p))
                return false;

            if (mask != 0) {
                auto [u, v] = _pb.pairs[p];
                int prefix[2] = { u, v };
                for (std::size_t i = 0 ; i < _engines.size() ; ++i) {
                    if ((_pb.edge_plans[i].required & mask) != _pb.edge_plans[i].required)
                        continue;
                    if (_engines[i]->run(prefix))
                        return false;
                }
            }
            return true;
        }

        // Vertices 0..last are complete after pair p. Complete neighbors must
        // have non-increasing color-degree vectors, and an incomplete vertex
        // cannot already exceed the last complete one in the first color.
        auto canonical_so_far(int p) const -> bool
        {
            int n = _pb.n;
            auto [u, v] = _pb.pairs[p];
            int last = u - 1;
            if (v == n - 1) {
                last = u;
                if (u >= 1 && _host.compare_degrees(u - 1, u) < 0)
                    return false;
                if (u == n - 2) {
                    last = n - 1;
                    if (_host.compare_degrees(n - 2, n - 1) < 0)
                        return false;
                }
            }
            if (last >= 0)
                for (int w : { u, v })
                    if (w > last && _host.color_degree(w, 1) > _host.color_degree(last, 1))
                        return false;
            return true;
        }

        void record_leaf()
        {
            if (_pb.objective == Objective::MaxMinColorClass) {
                _outcome.found = true;
                _outcome.witness = _host.to_graph();
                int seen = _shared.first_success.load();
                while (_task < seen && ! _shared.first_success.compare_exchange_weak(seen, _task))
                    ;
            }
            else {
                int value = total();
                if (value > _local_best) {
                    _local_best = value;
                    _outcome.found = true;
                    _outcome.value = value;
                    _outcome.witness = _host.to_graph();
                    int seen = _shared.incumbent.load();
                    while (value > seen && ! _shared.incumbent.compare_exchange_weak(seen, value))
                        ;
                }
            }
        }

        // Returns true to stop the whole task.
        auto dfs(int p) -> bool
        {
            if (! count_node() || cancelled())
                return true;
            if (p == static_cast<int>(_pb.pairs.size())) {
                record_leaf();
                return _pb.objective == Objective::MaxMinColorClass;
            }
            ColorMask top = all_colors(_pb.r);
            for (ColorMask mask = 0 ; mask <= top ; ++mask) {
                bool ok = assign(p, mask);
                bool stop = ok && dfs(p + 1);
                unassign(p, mask);
                if (stop)
                    return true;
            }
            return false;
        }

        const Problem & _pb;
        Shared & _shared;
        int _task;
        PartialHost _host;
        std::vector<int> _counts;
        std::vector<std::unique_ptr<detail::EmbeddingSearch<PartialHost>>> _engines;
        int _local_best = -1;
        TaskOutcome _outcome;
    };

    void check_inputs(int n, int r, std::span<const ColoredMultigraph> patterns)
    {
        if (n < 0 || n > max_search_vertices)
            fail(ErrorKind::InvalidArgument, "host size " + std::to_string(n) + " outside 0.." + std::to_string(max_search_vertices));
        if (r < 1 || r > max_colors)
            fail(ErrorKind::ColorOutOfRange, "color count " + std::to_string(r));
        for (std::size_t i = 0 ; i < patterns.size() ; ++i) {
            if (patterns[i].r() != r)
                fail(ErrorKind::ColorCountMismatch, "pattern " + std::to_string(i) + " has r=" + std::to_string(patterns[i].r())
                        + ", search has r=" + std::to_string(r));
            if (patterns[i].total_edges() == 0)
                fail(ErrorKind::PatternHasNoEdge, "pattern " + std::to_string(i) + " has no edges");
        }
    }

    auto make_problem(int n, int r, std::span<const ColoredMultigraph> patterns, Objective objective, const SearchOptions & options) -> Problem
    {
        Problem pb;
        pb.n = n;
        pb.r = r;
        pb.objective = objective;
        pb.options = options;
        if (pb.options.threads <= 0)
            pb.options.threads = default_thread_count();
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                pb.pairs.emplace_back(u, v);
        pb.edge_plans = make_edge_plans(patterns);
        return pb;
    }

    // Splits the tree into prefix tasks over the first few pairs, in search
    // order, so that picking the least successful task index reproduces the
    // sequential answer.
    auto make_tasks(const Problem & pb) -> std::vector<std::vector<ColorMask>>
    {
        int depth = 0;
        long long count = 1, branching = 1LL << pb.r;
        if (pb.options.threads > 1)
            while (depth < 3 && depth < static_cast<int>(pb.pairs.size()) && count < 8LL * pb.options.threads) {
                ++depth;
                count *= branching;
            }

        std::vector<std::vector<ColorMask>> tasks(1);
        for (int d = 0 ; d < depth ; ++d) {
            std::vector<std::vector<ColorMask>> next;
            for (const auto & t : tasks)
                for (ColorMask m = 0 ; m < static_cast<ColorMask>(branching) ; ++m) {
                    next.push_back(t);
                    next.back().push_back(m);
                }
            tasks = std::move(next);
        }
        return tasks;
    }

    struct RunSummary
    {
        std::vector<TaskOutcome> outcomes;
        bool exhaustive = true;
        long long nodes = 0;
    };

    auto run_tasks(const Problem & pb) -> RunSummary
    {
        auto tasks = make_tasks(pb);
        Shared shared;
        RunSummary summary;
        summary.outcomes.resize(tasks.size());

        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] {
            for (std::size_t i = next++ ; i < tasks.size() ; i = next++) {
                if (pb.objective == Objective::MaxMinColorClass && shared.first_success.load() < static_cast<int>(i))
                    continue;
                Searcher searcher{ pb, shared, static_cast<int>(i) };
                summary.outcomes[i] = searcher.run(tasks[i]);
            }
        };

        int threads = std::min<int>(pb.options.threads, static_cast<int>(tasks.size()));
        if (threads <= 1)
            worker();
        else {
            std::vector<std::jthread> pool;
            for (int t = 0 ; t < threads ; ++t)
                pool.emplace_back(worker);
        }

        summary.exhaustive = ! shared.budget_hit.load();
        summary.nodes = shared.nodes.load();
        return summary;
    }
}

auto decision_avoidable(int n, int r, std::span<const ColoredMultigraph> patterns, std::span<const int> thresholds,
        const SearchOptions & options) -> DecisionResult
{
    check_inputs(n, r, patterns);
    if (static_cast<int>(thresholds.size()) != r)
        fail(ErrorKind::InvalidArgument, "expected " + std::to_string(r) + " thresholds, got " + std::to_string(thresholds.size()));
    int pairs = n * (n - 1) / 2;
    for (int t : thresholds)
        if (t < 0 || t > pairs)
            fail(ErrorKind::InvalidArgument, "threshold " + std::to_string(t) + " outside 0.." + std::to_string(pairs));

    auto pb = make_problem(n, r, patterns, Objective::MaxMinColorClass, options);
    pb.thresholds.assign(thresholds.begin(), thresholds.end());
    auto summary = run_tasks(pb);

    DecisionResult result;
    result.exhaustive = summary.exhaustive;
    result.nodes_explored = summary.nodes;
    for (auto & outcome : summary.outcomes)
        if (outcome.found) {
            result.witness = std::move(outcome.witness);
            break;
        }
    return result;
}

auto mex_exact(int n, int r, std::span<const ColoredMultigraph> patterns, const SearchOptions & options) -> MexResult
{
    check_inputs(n, r, patterns);
    MexResult result;
    int lo = 0, hi = n * (n - 1) / 2;

    auto decide = [&] (int t) {
        std::vector<int> thresholds(r, t);
        auto d = decision_avoidable(n, r, patterns, thresholds, options);
        result.nodes_explored += d.nodes_explored;
        result.exhaustive = result.exhaustive && d.exhaustive;
        return d.witness;
    };

    std::optional<ColoredMultigraph> best = decide(0);
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (auto w = decide(mid)) {
            lo = mid;
            best = std::move(w);
        }
        else
            hi = mid - 1;
    }

    result.value = lo;
    result.witness = best ? std::move(*best) : ColoredMultigraph{ n, r };
    return result;
}

auto max_edges_avoiding(int n, int r, std::span<const ColoredMultigraph> patterns, const SearchOptions & options) -> MexResult
{
    check_inputs(n, r, patterns);
    auto pb = make_problem(n, r, patterns, Objective::MaxTotalEdges, options);
    auto summary = run_tasks(pb);

    MexResult result;
    result.exhaustive = summary.exhaustive;
    result.nodes_explored = summary.nodes;
    result.value = -1;
    for (auto & outcome : summary.outcomes)
        if (outcome.found && outcome.value > result.value) {
            result.value = outcome.value;
            result.witness = std::move(*outcome.witness);
        }
    if (result.value < 0) {
        result.value = 0;
        result.witness = ColoredMultigraph{ n, r };
    }
    return result;
}

}
