#pragma once

#include "mextremal/bounds.hpp"
#include "mextremal/coloring.hpp"
#include "mextremal/containment.hpp"
#include "mextremal/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace mextremal {

/// P': k+1 vertices, single-color pairs {2j, 2j+1} in matching_colors[j], and
/// every other pair carrying all r colors.
struct PPrimeSpec
{
    int k = 1;
    std::vector<int> matching_colors;
    int r = 2;

    auto m() const -> int { return static_cast<int>(matching_colors.size()); }
};

auto build_pprime(const PPrimeSpec & spec) -> ColoredMultigraph;

/// 1-colored graph of the pairs that carry every color of h.
auto multiplicity_r_core(const ColoredMultigraph & h) -> ColoredMultigraph;

enum class PartitionSource { Given, Exact, Greedy };

auto to_string(PartitionSource source) -> std::string_view;

struct CutTrace
{
    int part = 0;
    int color = 0;
    /// e(F_j): color edges inside the part.
    int edges = 0;
    /// e(F_j'): edges crossing the chosen cut.
    int cut_edges = 0;
    bool exact = true;
    /// Part vertices placed on the first side of the cut.
    std::vector<int> side;
};

struct RoundTrace
{
    int round = 0;
    std::vector<int> permutation;
    std::vector<CutTrace> cuts;
    /// e(R'): core edges crossing the k-partition.
    int kept_core_edges = 0;
    int hprime_edges = 0;
    std::optional<std::vector<int>> clique;
};

struct ColorStatistic
{
    int color = 0;
    /// e(H_c') / k, the exact expectation of e(F_j) over a uniform permutation.
    Rational expected_edges;
    /// (1/k)((r-1)/(rk) - m/(9rk^2)) C(n,2), valid under the density hypothesis.
    Rational density_lower_bound;
    double empirical_mean = 0.0;
};

struct PipelineTrace
{
    std::vector<std::vector<int>> parts;
    PartitionSource source = PartitionSource::Given;
    int core_edges = 0;
    int kept_core_edges = 0;
    /// The core already held K_{k+1}, so no sampling was needed.
    bool direct_clique = false;
    std::vector<RoundTrace> rounds;
    std::vector<ColorStatistic> statistics;
};

struct PipelineOptions
{
    std::optional<Partition> partition;
    int rounds = 10;
    std::uint64_t seed = 0;
};

/// Either an embedding of P' into h, or "not found within budget"; the
/// absence of an embedding is not a certificate that none exists.
struct PipelineResult
{
    std::optional<Embedding> embedding;
    PipelineTrace trace;

    auto found() const -> bool { return embedding.has_value(); }
};

/// Hunts for P' in h: k-partition of the multiplicity-r core (given, exact
/// for n <= 12, greedy beyond), then per round a seeded random permutation,
/// a cut of each prescribed color class inside its assigned part, and a
/// K_{k+1} search in the union.
auto find_pprime(const ColoredMultigraph & h, const PPrimeSpec & spec, const PipelineOptions & options = {}) -> PipelineResult;

inline constexpr int exact_partition_limit = 12;
inline constexpr int exact_cut_limit = 20;

}
