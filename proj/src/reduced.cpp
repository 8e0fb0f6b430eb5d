#include "mextremal/reduced.hpp"
#include "mextremal/containment.hpp"
#include "mextremal/error.hpp"

#include <algorithm>
#include <string>

namespace mextremal {

auto quotient(const ColoredMultigraph & g, const Partition & p) -> ReducedGraph
{
    if (! is_partition_of(p, g.n()))
        fail(ErrorKind::ImproperPartition, "not a canonical partition of " + std::to_string(g.n()) + " vertices");

    for (int i = 0 ; i < p.size() ; ++i) {
        const auto & cls = p.classes[i];
        for (std::size_t a = 0 ; a < cls.size() ; ++a)
            for (std::size_t b = a + 1 ; b < cls.size() ; ++b)
                if (g.adjacent(cls[a], cls[b]))
                    fail(ErrorKind::ImproperPartition, "class " + std::to_string(i) + " contains edge {"
                            + std::to_string(cls[a]) + "," + std::to_string(cls[b]) + "}");
    }

    ReducedGraph rg{ ColoredMultigraph{ p.size(), g.r() }, p, p.labels(g.n()) };
    for (int u = 0 ; u < g.n() ; ++u)
        for (int v = u + 1 ; v < g.n() ; ++v)
            if (ColorMask m = g.colors(u, v) ; m != 0) {
                int x = rg.map[u], y = rg.map[v];
                rg.base.set_colors(x, y, rg.base.colors(x, y) | m);
            }
    return rg;
}

namespace
{
    class MatchingSearch
    {
    public:
        explicit MatchingSearch(const ColoredMultigraph & g) :
            _g(g),
            _matched(g.n(), 0)
        {
        }

        auto run() -> MatchingResult
        {
            grow(0);
            return { static_cast<int>(_best.size()), _best };
        }

    private:
        void grow(int from)
        {
            if (_current.size() > _best.size())
                _best = _current;

            int free_count = 0;
            for (int v = from ; v < _g.n() ; ++v)
                if (! _matched[v])
                    ++free_count;
            if (_current.size() + free_count / 2 <= _best.size())
                return;

            int v = from;
            while (v < _g.n() && _matched[v])
                ++v;
            if (v >= _g.n() - 1)
                return;

            _matched[v] = 1;
            for (int w = v + 1 ; w < _g.n() ; ++w) {
                if (_matched[w] || multiplicity(_g.colors(v, w)) != 1)
                    continue;
                _matched[w] = 1;
                _current.emplace_back(v, w);
                grow(v + 1);
                _current.pop_back();
                _matched[w] = 0;
            }
            // leave v unmatched
            grow(v + 1);
            _matched[v] = 0;
        }

        const ColoredMultigraph & _g;
        std::vector<char> _matched;
        std::vector<std::pair<int, int>> _current, _best;
    };
}

auto multiplicity_one_matching(const ColoredMultigraph & reduced) -> MatchingResult
{
    MatchingSearch search{ reduced };
    return search.run();
}

auto multiplicity_one_matching(const ReducedGraph & rg) -> MatchingResult
{
    return multiplicity_one_matching(rg.base);
}

auto reduced_max_matching(const ColoredMultigraph & g) -> ReducedMatching
{
    int chi = chromatic_number(g);
    int ceiling = chi / 2;
    ReducedMatching best;
    best.value = -1;

    for_each_proper_partition(g, chi, [&] (const Partition & p) {
        auto matching = multiplicity_one_matching(quotient(g, p));
        if (matching.size > best.value) {
            best.value = matching.size;
            best.partition = p;
            best.matching = std::move(matching);
        }
        return best.value < ceiling;
    });
    return best;
}

auto is_reduced(const ColoredMultigraph & target, const ColoredMultigraph & g) -> bool
{
    if (! hom_exists(g, target))
        return false;

    // a hom into a smaller induced subgraph extends to every larger one, so
    // checking the subgraphs with one vertex removed covers all proper ones
    for (int drop = 0 ; drop < target.n() ; ++drop) {
        std::vector<int> keep;
        for (int v = 0 ; v < target.n() ; ++v)
            if (v != drop)
                keep.push_back(v);
        if (hom_exists(g, induced_subgraph(target, keep)))
            return false;
    }
    return true;
}

}
