#include "mextremal/containment.hpp"
#include "mextremal/detail/embedding_search.hpp"
#include "mextremal/error.hpp"

#include <string>

namespace mextremal {

namespace
{
    void require_same_r(const ColoredMultigraph & a, const ColoredMultigraph & b)
    {
        if (a.r() != b.r())
            fail(ErrorKind::ColorCountMismatch, "r=" + std::to_string(a.r()) + " vs r=" + std::to_string(b.r()));
    }

    auto preserves_colors(const ColoredMultigraph & from, const ColoredMultigraph & to, const std::vector<int> & map) -> bool
    {
        if (static_cast<int>(map.size()) != from.n())
            return false;
        for (int x : map)
            if (x < 0 || x >= to.n())
                return false;
        for (int u = 0 ; u < from.n() ; ++u)
            for (int v = u + 1 ; v < from.n() ; ++v) {
                ColorMask m = from.colors(u, v);
                if (m != 0 && (to.colors(map[u], map[v]) & m) != m)
                    return false;
            }
        return true;
    }
}

auto contains_colored(const ColoredMultigraph & host, const ColoredMultigraph & pattern) -> std::optional<Embedding>
{
    require_same_r(host, pattern);
    auto plan = detail::make_plan(pattern, {}, detail::OrderPolicy::DegreeDescending);
    detail::GraphHost view{ host };
    detail::EmbeddingSearch search{ plan, view, true };
    if (auto image = search.run())
        return Embedding{ std::move(*image) };
    return std::nullopt;
}

auto hom_exists(const ColoredMultigraph & pattern, const ColoredMultigraph & target) -> std::optional<HomWitness>
{
    require_same_r(pattern, target);
    auto plan = detail::make_plan(pattern, {}, detail::OrderPolicy::DegreeDescending);
    detail::GraphHost view{ target };
    detail::EmbeddingSearch search{ plan, view, false };
    if (auto image = search.run())
        return HomWitness{ std::move(*image) };
    return std::nullopt;
}

auto is_valid_embedding(const ColoredMultigraph & host, const ColoredMultigraph & pattern, const Embedding & e) -> bool
{
    if (host.r() != pattern.r() || ! preserves_colors(pattern, host, e.map))
        return false;
    std::vector<char> used(host.n(), 0);
    for (int x : e.map) {
        if (used[x])
            return false;
        used[x] = 1;
    }
    return true;
}

auto is_valid_hom(const ColoredMultigraph & pattern, const ColoredMultigraph & target, const HomWitness & h) -> bool
{
    // loops are impossible in the target, so color preservation already
    // forces adjacent pattern vertices apart
    return pattern.r() == target.r() && preserves_colors(pattern, target, h.map);
}

}
