#pragma once

#include "mextremal/graph.hpp"

#include <functional>
#include <span>
#include <vector>

namespace mextremal {

/// Disjoint nonempty classes covering 0..n-1, ordered by least element, each
/// class sorted ascending.
struct Partition
{
    std::vector<std::vector<int>> classes;

    /// Canonicalizes an arbitrary labeling (any integers) into a Partition.
    static auto from_labels(std::span<const int> labels) -> Partition;

    auto size() const -> int { return static_cast<int>(classes.size()); }
    /// Class index of each vertex; n must be the covered vertex count.
    auto labels(int n) const -> std::vector<int>;

    auto operator==(const Partition &) const -> bool = default;
};

/// True iff p is a partition of 0..n-1 into nonempty, canonically ordered classes.
auto is_partition_of(const Partition & p, int n) -> bool;
/// True iff every class is independent in the underlying simple graph of g.
auto is_proper(const ColoredMultigraph & g, const Partition & p) -> bool;

/// Exact chromatic number of the underlying simple graph (DSATUR
/// branch-and-bound between a clique lower bound and a greedy upper bound).
/// Throws EmptyVertexSet for n = 0.
auto chromatic_number(const ColoredMultigraph & g) -> int;

/// Size of a maximum clique of the underlying simple graph.
auto clique_number(const ColoredMultigraph & g) -> int;

/// Visits every partition of the vertex set into exactly k independent
/// classes once, in restricted-growth-string order. The visitor returns false
/// to stop early.
void for_each_proper_partition(const ColoredMultigraph & g, int k, const std::function<bool (const Partition &)> & visit);

auto enumerate_proper_partitions(const ColoredMultigraph & g, int k) -> std::vector<Partition>;

}
