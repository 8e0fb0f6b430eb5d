#include "corpus.hpp"
#include "oracles.hpp"

#include "mextremal/coloring.hpp"
#include "mextremal/error.hpp"

#include <doctest.h>

#include <set>

using namespace mextremal;

TEST_CASE("chromatic number examples")
{
    CHECK(chromatic_number(corpus::mono_clique(3)) == 3);
    CHECK(chromatic_number(corpus::c5()) == 3);
    CHECK(chromatic_number(cycle_pattern(5, "RBRBB")) == 3);
    CHECK(chromatic_number(ColoredMultigraph{ 5, 2 }) == 1);
    CHECK(chromatic_number(corpus::full_clique(6, 2)) == 6);
    CHECK_THROWS_AS(chromatic_number(ColoredMultigraph{ 0, 1 }), Error);
}

TEST_CASE("partition enumeration examples")
{
    auto k3 = enumerate_proper_partitions(corpus::mono_clique(3), 3);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].classes == std::vector<std::vector<int>>{ { 0 }, { 1 }, { 2 } });

    CHECK(oracle::count_partitions(corpus::c5(), 3) == 5);
    CHECK(enumerate_proper_partitions(corpus::c5(), 3).size() == 5);
    CHECK(enumerate_proper_partitions(corpus::mono_clique(3), 2).empty());
}

TEST_CASE("partition helpers")
{
    int labels[] = { 7, 3, 7, 1 };
    auto p = Partition::from_labels(labels);
    CHECK(p.classes == std::vector<std::vector<int>>{ { 0, 2 }, { 1 }, { 3 } });
    CHECK(p.labels(4) == std::vector<int>{ 0, 1, 0, 2 });
    CHECK(is_partition_of(p, 4));
    CHECK(! is_partition_of(p, 5));
    CHECK(! is_partition_of(Partition{ { { 1 }, { 0 } } }, 2));
    CHECK(is_proper(corpus::c5(), Partition::from_labels(std::vector<int>{ 0, 1, 0, 1, 2 })));
    CHECK(! is_proper(corpus::c5(), Partition::from_labels(std::vector<int>{ 0, 0, 1, 1, 2 })));
}

TEST_CASE("chromatic number agrees with the oracle and the enumeration")
{
    for (const auto & [name, g] : corpus::mixed(8, 4)) {
        CAPTURE(name);
        int chi = chromatic_number(g);
        if (g.n() <= 7)
            CHECK(chi == oracle::chromatic_number(g));
        CHECK(enumerate_proper_partitions(g, chi).size() > 0);
        if (chi > 1)
            CHECK(enumerate_proper_partitions(g, chi - 1).empty());
        CHECK(clique_number(g) <= chi);
    }
}

TEST_CASE("enumeration yields each proper partition once")
{
    for (const auto & [name, g] : corpus::mixed(6, 3)) {
        CAPTURE(name);
        for (int k = 1 ; k <= g.n() ; ++k) {
            auto all = enumerate_proper_partitions(g, k);
            std::set<std::vector<std::vector<int>>> distinct;
            for (const auto & p : all) {
                CHECK(is_partition_of(p, g.n()));
                CHECK(is_proper(g, p));
                CHECK(p.size() == k);
                distinct.insert(p.classes);
            }
            CHECK(distinct.size() == all.size());
            CHECK(static_cast<long long>(all.size()) == oracle::count_partitions(g, k));
        }
        CHECK(enumerate_proper_partitions(g, g.n()).size() == 1);
    }
}

TEST_CASE("enumeration stops when the visitor declines")
{
    int seen = 0;
    for_each_proper_partition(ColoredMultigraph{ 5, 1 }, 2, [&] (const Partition &) {
        ++seen;
        return seen < 3;
    });
    CHECK(seen == 3);
}
