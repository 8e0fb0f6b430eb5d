#include "corpus.hpp"

#include "mextremal/constructions.hpp"
#include "mextremal/containment.hpp"
#include "mextremal/error.hpp"
#include "mextremal/pipeline.hpp"

#include <doctest.h>

using namespace mextremal;

namespace {

auto kind_of(auto && action) -> ErrorKind
{
    try {
        action();
    }
    catch (const Error & e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

void check_trace(const ColoredMultigraph & h, const PPrimeSpec & spec, const PipelineResult & result)
{
    const auto & t = result.trace;
    CHECK(static_cast<int>(t.parts.size()) == spec.k);
    for (const auto & rt : t.rounds) {
        int cut_total = 0;
        for (const auto & c : rt.cuts) {
            cut_total += c.cut_edges;
            CHECK(c.cut_edges <= c.edges);
            if (c.exact)
                CHECK(2 * c.cut_edges >= c.edges);
        }
        CHECK(rt.hprime_edges == rt.kept_core_edges + cut_total);
        CHECK(static_cast<int>(rt.cuts.size()) == spec.m());
    }
    if (result.embedding) {
        auto pattern = build_pprime(spec);
        CHECK(is_valid_embedding(h, pattern, *result.embedding));
        CHECK(contains_colored(h, pattern));
    }
}

}

TEST_CASE("P' shapes")
{
    auto a = build_pprime({ 2, { red }, 2 });
    CHECK(a.n() == 3);
    CHECK(a.colors(0, 1) == color_bit(red));
    CHECK(a.colors(0, 2) == 3);
    CHECK(a.colors(1, 2) == 3);
    CHECK(contains_colored(a, t1()));

    CHECK(build_pprime({ 2, {}, 2 }) == corpus::full_clique(3, 2));

    auto b = build_pprime({ 3, { red, blue }, 2 });
    CHECK(b.n() == 4);
    CHECK(b.colors(0, 1) == color_bit(red));
    CHECK(b.colors(2, 3) == color_bit(blue));
    CHECK(b.total_edges() == 2 + 4 * 2);

    CHECK(kind_of([] { build_pprime({ 2, { red, red }, 2 }); }) == ErrorKind::MatchingTooLarge);
    CHECK(kind_of([] { build_pprime({ 2, { 3 }, 2 }); }) == ErrorKind::ColorOutOfRange);
}

TEST_CASE("multiplicity-r core")
{
    auto core = multiplicity_r_core(t1());
    CHECK(core.r() == 1);
    CHECK(core.total_edges() == 1);
    CHECK(core.adjacent(0, 1));

    auto disjoint = corpus::from_masks(4, 2, { { 0, 1, 1 }, { 2, 3, 2 }, { 0, 2, 1 } });
    CHECK(multiplicity_r_core(disjoint).total_edges() == 0);
    CHECK(multiplicity_r_core(corpus::full_clique(4, 3)) == corpus::mono_clique(4, 1));
}

TEST_CASE("pipeline finds P' in blow-ups of P'")
{
    for (int k : { 2, 3 })
        for (int m : { 0, 1 }) {
            CAPTURE(k);
            CAPTURE(m);
            PPrimeSpec spec{ k, std::vector<int>(m, red), 2 };
            auto h = blow_up(build_pprime(spec), 3);
            PipelineOptions options;
            options.rounds = 10;
            options.seed = 1;
            auto result = find_pprime(h, spec, options);
            CHECK(result.found());
            CHECK(result.trace.source == PartitionSource::Exact);
            CHECK(result.trace.direct_clique == (m == 0));
            check_trace(h, spec, result);
        }
}

TEST_CASE("pipeline on a full-multiplicity clique and on a bipartite host")
{
    auto full = find_pprime(corpus::full_clique(4, 2), { 3, { blue }, 2 });
    CHECK(full.found());
    check_trace(corpus::full_clique(4, 2), { 3, { blue }, 2 }, full);

    auto bipartite = blow_up(corpus::full_clique(2, 2), 4);
    PipelineOptions options;
    options.rounds = 6;
    auto none = find_pprime(bipartite, { 2, { red }, 2 }, options);
    CHECK(! none.found());
    CHECK(none.trace.rounds.size() == 6);
    check_trace(bipartite, { 2, { red }, 2 }, none);
}

TEST_CASE("pipeline is deterministic for a fixed seed")
{
    PPrimeSpec spec{ 3, { red }, 2 };
    auto h = blow_up(build_pprime(spec), 3);
    PipelineOptions options;
    options.seed = 77;
    auto a = find_pprime(h, spec, options), b = find_pprime(h, spec, options);
    REQUIRE(a.trace.rounds.size() == b.trace.rounds.size());
    for (std::size_t i = 0 ; i < a.trace.rounds.size() ; ++i) {
        CHECK(a.trace.rounds[i].permutation == b.trace.rounds[i].permutation);
        CHECK(a.trace.rounds[i].hprime_edges == b.trace.rounds[i].hprime_edges);
    }
    CHECK(a.embedding == b.embedding);
}

TEST_CASE("pipeline with a given partition and the greedy fallback")
{
    PPrimeSpec spec{ 2, { red }, 2 };
    auto h = blow_up(build_pprime(spec), 3);
    std::vector<int> labels{ 0, 0, 0, 0, 0, 0, 1, 1, 1 };
    PipelineOptions options;
    options.partition = Partition::from_labels(labels);
    auto given = find_pprime(h, spec, options);
    CHECK(given.trace.source == PartitionSource::Given);
    CHECK(given.found());
    check_trace(h, spec, given);

    options.partition = Partition::from_labels(std::vector<int>{ 0, 0, 0 });
    CHECK(kind_of([&] { find_pprime(h, spec, options); }) == ErrorKind::PartitionNotProperForCore);

    PPrimeSpec big{ 3, { blue }, 2 };
    auto large = blow_up(build_pprime(big), 4);
    PipelineOptions greedy;
    greedy.rounds = 20;
    auto g = find_pprime(large, big, greedy);
    CHECK(g.trace.source == PartitionSource::Greedy);
    check_trace(large, big, g);

    CHECK(kind_of([&] { find_pprime(h, { 2, { red }, 3 }); }) == ErrorKind::ColorCountMismatch);
}

TEST_CASE("pipeline statistics")
{
    PPrimeSpec spec{ 2, { red }, 2 };
    auto h = blow_up(build_pprime(spec), 3);
    auto result = find_pprime(h, spec);
    REQUIRE(result.trace.statistics.size() == 1);
    const auto & s = result.trace.statistics[0];
    CHECK(s.color == red);
    // 9 red edges inside the merged part, spread over k = 2 parts
    CHECK(s.expected_edges == Rational(9, 2));
    CHECK(s.empirical_mean >= 0.0);
}
