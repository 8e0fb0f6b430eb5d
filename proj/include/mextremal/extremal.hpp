#pragma once

#include "mextremal/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mextremal {

enum class Objective {
    /// Maximize the smallest color class (the mex objective).
    MaxMinColorClass,
    /// Maximize the total number of colored edges.
    MaxTotalEdges,
};

struct SearchOptions
{
    /// Worker threads; 0 means default_thread_count().
    int threads = 0;
    /// Node budget across the whole search; 0 means unlimited.
    long long max_nodes = 0;
    /// Require color-degree vectors to be lexicographically non-increasing in
    /// vertex order.
    bool symmetry_breaking = true;
};

struct MexResult
{
    int value = 0;
    ColoredMultigraph witness;
    /// True iff the full symmetry-reduced space was covered.
    bool exhaustive = true;
    long long nodes_explored = 0;
};

struct DecisionResult
{
    std::optional<ColoredMultigraph> witness;
    bool exhaustive = true;
    long long nodes_explored = 0;
};

/// MEXTREMAL_THREADS if set and positive, else the hardware concurrency.
auto default_thread_count() -> int;

/// Largest T such that some r-colored multigraph on n vertices with every
/// color class of size >= T avoids all patterns. Binary search over
/// decision_avoidable. Throws PatternHasNoEdge, ColorCountMismatch.
auto mex_exact(int n, int r, std::span<const ColoredMultigraph> patterns, const SearchOptions & options = {}) -> MexResult;

/// Largest total edge count of a pattern-avoiding r-colored multigraph on n
/// vertices.
auto max_edges_avoiding(int n, int r, std::span<const ColoredMultigraph> patterns, const SearchOptions & options = {}) -> MexResult;

/// A pattern-avoiding multigraph with at least thresholds[c-1] edges of each
/// color c, or none. The witness is the lexicographically least under the
/// pair-lex encoding (pairs (0,1),(0,2),...; color sets as bitmasks) among
/// those the symmetry breaking admits.
auto decision_avoidable(int n, int r, std::span<const ColoredMultigraph> patterns, std::span<const int> thresholds,
        const SearchOptions & options = {}) -> DecisionResult;

inline constexpr int max_search_vertices = 16;

}
