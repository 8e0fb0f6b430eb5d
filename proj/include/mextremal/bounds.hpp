#pragma once

#include "mextremal/coloring.hpp"
#include "mextremal/graph.hpp"
#include "mextremal/reduced.hpp"

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace mextremal {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is 1.
auto to_string(const Rational & q) -> std::string;
/// Fixed-point rendering for display only.
auto to_decimal(const Rational & q, int digits = 6) -> std::string;

/// 1 - 1/(r(chi-1)). Throws ChiTooSmall for chi < 2.
auto trivial_bound(int r, int chi) -> Rational;
/// 1 - 1/(r(chi-1)) - M/(9 r chi^2). Throws MOutOfRange unless 0 <= M <= chi/2.
auto theorem_bound(int r, int chi, int M) -> Rational;
/// 1 - 1/(r(k-2m-1)), the density reached by the lower-bound family for H'.
auto construction_lower(int r, int k, int m) -> Rational;

struct BoundReport
{
    int r = 0;
    int chi = 0;
    int M = 0;
    Rational trivial_upper;
    Rational theorem_upper;
    std::optional<Rational> construction_lower;
    ReducedMatching witness;
};

/// Computes chi and M exactly and evaluates both upper bounds.
auto report(const ColoredMultigraph & g, int r) -> BoundReport;

struct TightnessReport
{
    int r = 0, k = 0, m = 0;
    Rational construction_lower;
    /// theorem_bound(r, k, m): the largest upper bound compatible with M >= m.
    Rational theorem_upper;
    Rational trivial_upper;
    /// trivial_upper - construction_lower.
    Rational deficit;
    /// m / (9 r k^2).
    Rational theorem_term;
    /// deficit / theorem_term.
    Rational gap_ratio;
    bool consistent = false;
};

/// Compares the construction lower bound against the theorem upper bound.
/// Throws RegimeViolation when 10m > k, OddR for odd r.
auto tightness_check(int r, int k, int m) -> TightnessReport;

}
