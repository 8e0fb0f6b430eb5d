#include "mextremal/coloring.hpp"
#include "mextremal/error.hpp"

#include <algorithm>
#include <map>

namespace mextremal {

auto Partition::from_labels(std::span<const int> labels) -> Partition
{
    std::map<int, int> index;
    Partition p;
    for (int v = 0 ; v < static_cast<int>(labels.size()) ; ++v) {
        auto [it, fresh] = index.try_emplace(labels[v], static_cast<int>(p.classes.size()));
        if (fresh)
            p.classes.emplace_back();
        p.classes[it->second].push_back(v);
    }
    return p;
}

auto Partition::labels(int n) const -> std::vector<int>
{
    std::vector<int> result(n, -1);
    for (int i = 0 ; i < size() ; ++i)
        for (int v : classes[i])
            if (v >= 0 && v < n)
                result[v] = i;
    return result;
}

auto is_partition_of(const Partition & p, int n) -> bool
{
    std::vector<char> seen(n, 0);
    int covered = 0, previous_least = -1;
    for (const auto & cls : p.classes) {
        if (cls.empty() || ! std::is_sorted(cls.begin(), cls.end()) || cls.front() <= previous_least)
            return false;
        previous_least = cls.front();
        for (int v : cls) {
            if (v < 0 || v >= n || seen[v])
                return false;
            seen[v] = 1;
            ++covered;
        }
    }
    return covered == n;
}

auto is_proper(const ColoredMultigraph & g, const Partition & p) -> bool
{
    for (const auto & cls : p.classes)
        for (std::size_t i = 0 ; i < cls.size() ; ++i)
            for (std::size_t j = i + 1 ; j < cls.size() ; ++j)
                if (g.adjacent(cls[i], cls[j]))
                    return false;
    return true;
}

namespace
{
    class ChromaticSolver
    {
    public:
        explicit ChromaticSolver(const ColoredMultigraph & g) :
            _g(g),
            _n(g.n()),
            _color(g.n(), -1)
        {
        }

        auto clique_lower_bound() -> int
        {
            std::vector<int> candidates(_n);
            for (int v = 0 ; v < _n ; ++v)
                candidates[v] = v;
            _best_clique = 0;
            grow_clique(0, candidates);
            return _best_clique;
        }

        auto greedy_upper_bound() -> int
        {
            std::fill(_color.begin(), _color.end(), -1);
            int used = 0;
            for (int step = 0 ; step < _n ; ++step) {
                int v = pick_vertex();
                int c = 0;
                while (! can_use(v, c))
                    ++c;
                _color[v] = c;
                used = std::max(used, c + 1);
            }
            std::fill(_color.begin(), _color.end(), -1);
            return used;
        }

        auto solve() -> int
        {
            _lower = clique_lower_bound();
            _best = greedy_upper_bound();
            if (_lower < _best)
                branch(0, 0);
            return _best;
        }

    private:
        void grow_clique(int size, const std::vector<int> & candidates)
        {
            if (candidates.empty()) {
                _best_clique = std::max(_best_clique, size);
                return;
            }
            for (std::size_t i = 0 ; i < candidates.size() ; ++i) {
                if (size + static_cast<int>(candidates.size() - i) <= _best_clique)
                    return;
                int v = candidates[i];
                std::vector<int> next;
                for (std::size_t j = i + 1 ; j < candidates.size() ; ++j)
                    if (_g.adjacent(v, candidates[j]))
                        next.push_back(candidates[j]);
                grow_clique(size + 1, next);
            }
        }

        auto can_use(int v, int c) const -> bool
        {
            for (int w = 0 ; w < _n ; ++w)
                if (_color[w] == c && _g.adjacent(v, w))
                    return false;
            return true;
        }

        // DSATUR choice: most distinct neighbor colors, then most uncolored
        // neighbors, then lowest index.
        auto pick_vertex() const -> int
        {
            int best = -1, best_sat = -1, best_deg = -1;
            std::vector<char> seen;
            for (int v = 0 ; v < _n ; ++v) {
                if (_color[v] != -1)
                    continue;
                seen.assign(_n, 0);
                int sat = 0, deg = 0;
                for (int w = 0 ; w < _n ; ++w) {
                    if (! _g.adjacent(v, w))
                        continue;
                    if (_color[w] == -1)
                        ++deg;
                    else if (! seen[_color[w]]) {
                        seen[_color[w]] = 1;
                        ++sat;
                    }
                }
                if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                    best = v;
                    best_sat = sat;
                    best_deg = deg;
                }
            }
            return best;
        }

        void branch(int colored, int used)
        {
            if (_best == _lower)
                return;
            if (colored == _n) {
                _best = std::min(_best, used);
                return;
            }
            int v = pick_vertex();
            for (int c = 0 ; c < used ; ++c) {
                if (! can_use(v, c))
                    continue;
                _color[v] = c;
                branch(colored + 1, used);
                _color[v] = -1;
                if (_best == _lower)
                    return;
            }
            if (used + 1 < _best) {
                _color[v] = used;
                branch(colored + 1, used + 1);
                _color[v] = -1;
            }
        }

        const ColoredMultigraph & _g;
        int _n;
        std::vector<int> _color;
        int _best_clique = 0;
        int _lower = 0;
        int _best = 0;
    };

    class PartitionWalker
    {
    public:
        PartitionWalker(const ColoredMultigraph & g, int k, const std::function<bool (const Partition &)> & visit) :
            _g(g),
            _k(k),
            _visit(visit),
            _label(g.n(), -1)
        {
        }

        void run()
        {
            if (_k >= 1 && _k <= _g.n())
                step(0, 0);
        }

    private:
        auto step(int v, int used) -> bool
        {
            int n = _g.n();
            if (v == n) {
                if (used != _k)
                    return true;
                return _visit(Partition::from_labels(_label));
            }
            int top = std::min(used, _k - 1);
            for (int c = 0 ; c <= top ; ++c) {
                int now_used = std::max(used, c + 1);
                if (n - v - 1 < _k - now_used)
                    continue;
                bool ok = true;
                for (int w = 0 ; w < v && ok ; ++w)
                    if (_label[w] == c && _g.adjacent(v, w))
                        ok = false;
                if (! ok)
                    continue;
                _label[v] = c;
                if (! step(v + 1, now_used))
                    return false;
            }
            _label[v] = -1;
            return true;
        }

        const ColoredMultigraph & _g;
        int _k;
        const std::function<bool (const Partition &)> & _visit;
        std::vector<int> _label;
    };
}

auto chromatic_number(const ColoredMultigraph & g) -> int
{
    if (g.n() == 0)
        fail(ErrorKind::EmptyVertexSet, "chromatic number of a graph with no vertices");
    ChromaticSolver solver{ g };
    return solver.solve();
}

auto clique_number(const ColoredMultigraph & g) -> int
{
    ChromaticSolver solver{ g };
    return solver.clique_lower_bound();
}

void for_each_proper_partition(const ColoredMultigraph & g, int k, const std::function<bool (const Partition &)> & visit)
{
    PartitionWalker walker{ g, k, visit };
    walker.run();
}

auto enumerate_proper_partitions(const ColoredMultigraph & g, int k) -> std::vector<Partition>
{
    std::vector<Partition> result;
    for_each_proper_partition(g, k, [&] (const Partition & p) {
        result.push_back(p);
        return true;
    });
    return result;
}

}
