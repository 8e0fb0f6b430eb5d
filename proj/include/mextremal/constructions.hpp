#pragma once

#include "mextremal/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace mextremal {

/// Color 1 is red, color 2 is blue throughout the two-color constructions.
inline constexpr int red = 1;
inline constexpr int blue = 2;

/// Complete multipartite 1-colored graph with balanced contiguous parts.
auto turan_graph(int n, int parts) -> ColoredMultigraph;

/// r-1 perfect matchings partitioning the pairs of {0..r-1}.
struct OneFactorization
{
    int r = 0;
    std::vector<std::vector<std::pair<int, int>>> classes;

    /// Matching index (0-based) containing {u,v}.
    auto color_of(int u, int v) const -> int;
};

/// Circle-method 1-factorization of K_r; throws OddR for odd r.
auto one_factorization(int r) -> OneFactorization;

struct GadgetSpec
{
    int t = 1;
    int r = 2;
    int s = 1;
    std::uint64_t seed = 0;
};

/// Complete bipartite K_{t,t} (side X = 0..t-1, side Y = t..2t-1) with every
/// cross pair colored uniformly at random from [r] by a seeded generator.
auto gadget_coloring(const GadgetSpec & spec) -> ColoredMultigraph;

/// Color 2 on (i, i+1 mod t), color 1 elsewhere: the complement of a
/// permutation matrix. At t = 3 every 2x2 sub-board sees both colors.
auto gadget_permutation_complement(int t) -> ColoredMultigraph;
/// Every cross pair in color 1; fails verification whenever r >= 2.
auto gadget_monochrome(int t, int r) -> ColoredMultigraph;
/// Color 1 where i+j is even, color 2 where it is odd.
auto gadget_checkerboard(int t) -> ColoredMultigraph;

struct GadgetSampling
{
    long long trials = 0;
    std::uint64_t seed = 0;
};

struct GadgetVerdict
{
    bool pass = true;
    /// Violating side subsets (side-local indices 0..t-1) when pass is false.
    std::vector<int> rows, cols;
    long long checked = 0;
};

/// Checks that every pair of s-subsets X' of X and Y' of Y spans all r
/// colors. Exhaustive when sampling is empty (limited to C(t,s)^2 <= 1e7,
/// ExactTooLarge beyond), otherwise samples uniform subset pairs.
auto verify_gadget(const ColoredMultigraph & gadget, int s, std::optional<GadgetSampling> sampling = std::nullopt) -> GadgetVerdict;

/// True iff the sub-board rows x cols of the gadget carries all r colors.
auto spans_all_colors(const ColoredMultigraph & gadget, const std::vector<int> & rows, const std::vector<int> & cols) -> bool;

inline constexpr double exact_gadget_limit = 1e7;

/// ceil(t / (rk)^k), the subset size in the gadget claim.
auto gadget_subset_size_claim(int t, int r, int k) -> int;
/// ceil(t / (rk)^2), the subset size used inside the counting argument.
auto gadget_subset_size_proof(int t, int r, int k) -> int;
/// Union bound r * C(t, ceil(t/(rk)^k))^2 * ((r-1)/r)^((t/(rk))^2) on the
/// expected number of bad subset pairs of a random coloring.
auto gadget_failure_bound(int r, int k, int t) -> double;

/// Complete k-partite graph with parts of size t (part j holds vertices
/// j*t .. j*t+t-1); each pair of parts carries its own random gadget,
/// seeded from seed and the part pair.
auto graph_H(int r, int k, int t, std::uint64_t seed) -> ColoredMultigraph;
/// Same layout with one shared gadget (sides of size t) between every pair of parts.
auto graph_H(int k, const ColoredMultigraph & gadget) -> ColoredMultigraph;

/// H plus a 2m-clique on new vertices, with the clique and all clique-to-H
/// pairs in the given color.
auto graph_H_prime(const ColoredMultigraph & h, int m, int color) -> ColoredMultigraph;

/// The lower-bound family on vertices w(x,y,z), x < k-1, y < r, z < m.
struct ConstructionFamily
{
    int r = 0, k = 0, m = 0;
    ColoredMultigraph graph;

    auto vertex(int x, int y, int z) const -> int { return (x * r + y) * m + z; }
    struct Coords { int x, y, z; };
    auto coords(int id) const -> Coords { return { id / (r * m), (id / m) % r, id % m }; }
};

/// Color r misses exactly the pairs inside one (x,y) group; color i < r misses
/// the pairs w(x,y,z) w(x,y',z') whose {y,y'} has color i in the circle
/// 1-factorization. Throws OddR for odd r.
auto lower_bound_family(int r, int k, int m) -> ConstructionFamily;

/// Bicolored triangles with the double edge on {0,1}: T1 has red {0,2} and
/// {1,2}; T2 has red {0,2} and blue {1,2}.
auto t1() -> ColoredMultigraph;
auto t2() -> ColoredMultigraph;

/// Cycle v0..v(len-1) with edge {v_i, v_(i+1)} colored by word[i] ('R' or 'B').
auto cycle_pattern(int length, std::string_view word) -> ColoredMultigraph;

}
