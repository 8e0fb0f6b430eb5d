#include "mextremal/bounds.hpp"
#include "mextremal/error.hpp"

#include <cstdlib>

namespace mextremal {

auto to_string(const Rational & q) -> std::string
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

auto to_decimal(const Rational & q, int digits) -> std::string
{
    std::int64_t num = q.numerator(), den = q.denominator();
    std::string out = num < 0 ? "-" : "";
    num = std::llabs(num);
    out += std::to_string(num / den);
    std::int64_t rest = num % den;
    if (digits > 0) {
        out += ".";
        for (int i = 0 ; i < digits ; ++i) {
            rest *= 10;
            out += static_cast<char>('0' + rest / den);
            rest %= den;
        }
    }
    return out;
}

auto trivial_bound(int r, int chi) -> Rational
{
    if (r < 1)
        fail(ErrorKind::InvalidArgument, "r must be positive, got " + std::to_string(r));
    if (chi < 2)
        fail(ErrorKind::ChiTooSmall, "chi=" + std::to_string(chi) + "; the bounds need chi >= 2");
    return Rational{ 1 } - Rational{ 1, std::int64_t{ r } * (chi - 1) };
}

auto theorem_bound(int r, int chi, int M) -> Rational
{
    auto trivial = trivial_bound(r, chi);
    if (M < 0 || M > chi / 2)
        fail(ErrorKind::MOutOfRange, "M=" + std::to_string(M) + " outside 0.." + std::to_string(chi / 2));
    return trivial - Rational{ M, 9 * std::int64_t{ r } * chi * chi };
}

auto construction_lower(int r, int k, int m) -> Rational
{
    std::int64_t parts = k - 2 * m - 1;
    if (r < 1 || parts < 1)
        fail(ErrorKind::InvalidArgument, "need r >= 1 and k - 2m - 1 >= 1");
    return Rational{ 1 } - Rational{ 1, r * parts };
}

auto report(const ColoredMultigraph & g, int r) -> BoundReport
{
    if (g.r() != r)
        fail(ErrorKind::ColorCountMismatch, "graph has r=" + std::to_string(g.r()) + ", requested r=" + std::to_string(r));
    BoundReport rep;
    rep.r = r;
    rep.chi = chromatic_number(g);
    rep.trivial_upper = trivial_bound(r, rep.chi);
    rep.witness = reduced_max_matching(g);
    rep.M = rep.witness.value;
    rep.theorem_upper = theorem_bound(r, rep.chi, rep.M);
    return rep;
}

auto tightness_check(int r, int k, int m) -> TightnessReport
{
    if (r % 2 != 0)
        fail(ErrorKind::OddR, "r=" + std::to_string(r) + " is odd");
    if (r < 2 || m < 1)
        fail(ErrorKind::InvalidArgument, "need r >= 2 and m >= 1");
    if (10 * m > k)
        fail(ErrorKind::RegimeViolation, "10m=" + std::to_string(10 * m) + " exceeds k=" + std::to_string(k));

    TightnessReport t;
    t.r = r;
    t.k = k;
    t.m = m;
    t.construction_lower = construction_lower(r, k, m);
    t.trivial_upper = trivial_bound(r, k);
    t.theorem_upper = theorem_bound(r, k, m);
    t.deficit = t.trivial_upper - t.construction_lower;
    t.theorem_term = Rational{ m, 9 * std::int64_t{ r } * k * k };
    t.gap_ratio = t.deficit / t.theorem_term;
    t.consistent = t.construction_lower <= t.theorem_upper;
    return t;
}

}
