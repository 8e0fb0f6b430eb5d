#pragma once

#include "mextremal/coloring.hpp"
#include "mextremal/graph.hpp"

#include <utility>
#include <vector>

namespace mextremal {

/// Quotient of a graph by a proper partition. base has one vertex per class
/// and carries color c on {X,Y} exactly when some color-c edge of the source
/// joins X and Y.
struct ReducedGraph
{
    ColoredMultigraph base;
    Partition partition;
    /// Class index of each source vertex (the quotient map).
    std::vector<int> map;

    auto colorset(int x, int y) const -> ColorMask { return base.colors(x, y); }
};

/// A matching among class pairs that carry exactly one color.
struct MatchingResult
{
    int size = 0;
    std::vector<std::pair<int, int>> edges;
};

struct ReducedMatching
{
    int value = 0;
    Partition partition;
    MatchingResult matching;
};

/// Throws ImproperPartition (naming the class and edge) if p is not proper.
auto quotient(const ColoredMultigraph & g, const Partition & p) -> ReducedGraph;

/// Maximum matching over pairs of multiplicity exactly one.
auto multiplicity_one_matching(const ColoredMultigraph & reduced) -> MatchingResult;
auto multiplicity_one_matching(const ReducedGraph & rg) -> MatchingResult;

/// Reduced maximum matching number: the best multiplicity-one matching over
/// quotients of all proper chi(g)-partitions. The witness is the first
/// partition in enumeration order that attains the maximum.
auto reduced_max_matching(const ColoredMultigraph & g) -> ReducedMatching;

/// True iff g maps homomorphically into target with independent preimages and
/// into no proper induced subgraph of target.
auto is_reduced(const ColoredMultigraph & target, const ColoredMultigraph & g) -> bool;

}
