#include "corpus.hpp"
#include "oracles.hpp"

#include "mextremal/coloring.hpp"
#include "mextremal/constructions.hpp"
#include "mextremal/containment.hpp"
#include "mextremal/error.hpp"
#include "mextremal/reduced.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace mextremal;

TEST_CASE("containment examples")
{
    auto host = corpus::rb_path();
    auto e = contains_colored(host, corpus::rb_path());
    REQUIRE(e);
    CHECK(is_valid_embedding(host, corpus::rb_path(), *e));

    CHECK(! contains_colored(corpus::mono_clique(3, 2, blue), corpus::mono_clique(3, 2, red)));

    auto blown = blow_up(t2(), 3);
    REQUIRE(oracle::contains(blown, corpus::c5()));
    auto c = contains_colored(blown, corpus::c5());
    REQUIRE(c);
    CHECK(is_valid_embedding(blown, corpus::c5(), *c));

    CHECK_THROWS_AS(contains_colored(corpus::red_edge(3), corpus::red_edge(2)), Error);
}

TEST_CASE("isolated pattern vertices still consume host vertices")
{
    auto pattern = corpus::from_masks(3, 2, { { 0, 1, 1 } });
    CHECK(! contains_colored(corpus::red_edge(), pattern));
    auto host = corpus::from_masks(3, 2, { { 1, 2, 1 } });
    auto e = contains_colored(host, pattern);
    REQUIRE(e);
    CHECK(e->map.size() == 3);
    CHECK(is_valid_embedding(host, pattern, *e));
}

TEST_CASE("homomorphism examples")
{
    auto h = hom_exists(corpus::c5(), t2());
    REQUIRE(h);
    CHECK(is_valid_hom(corpus::c5(), t2(), *h));

    CHECK(! hom_exists(corpus::mono_clique(3), corpus::red_edge()));

    auto g = corpus::c5();
    for_each_proper_partition(g, 3, [&] (const Partition & p) {
        auto q = quotient(g, p);
        CHECK(is_valid_hom(g, q.base, HomWitness{ q.map }));
        CHECK(hom_exists(g, q.base));
        return true;
    });
    CHECK_THROWS_AS(hom_exists(corpus::red_edge(3), corpus::red_edge(2)), Error);
}

TEST_CASE("containment agrees with the injective-map oracle")
{
    auto graphs = corpus::mixed(6, 5);
    int compared = 0;
    for (const auto & [hname, host] : graphs)
        for (const auto & [pname, pattern] : graphs) {
            if (pattern.n() > 5 || pattern.total_edges() == 0)
                continue;
            CAPTURE(hname);
            CAPTURE(pname);
            auto e = contains_colored(host, pattern);
            CHECK(e.has_value() == oracle::contains(host, pattern));
            if (e)
                CHECK(is_valid_embedding(host, pattern, *e));
            ++compared;
        }
    CHECK(compared > 500);
}

TEST_CASE("homomorphism agrees with the all-maps oracle")
{
    auto graphs = corpus::mixed(6, 4);
    for (const auto & [tname, target] : graphs) {
        if (target.n() > 4)
            continue;
        for (const auto & [pname, pattern] : graphs) {
            CAPTURE(tname);
            CAPTURE(pname);
            auto h = hom_exists(pattern, target);
            CHECK(h.has_value() == oracle::hom(pattern, target));
            if (h)
                CHECK(is_valid_hom(pattern, target, *h));
        }
    }
}

TEST_CASE("homomorphism into P iff containment in the blow-up of P")
{
    auto graphs = corpus::mixed(6, 3);
    for (const auto & [tname, target] : graphs) {
        if (target.n() > 4)
            continue;
        for (const auto & [pname, pattern] : graphs) {
            CAPTURE(tname);
            CAPTURE(pname);
            bool hom = hom_exists(pattern, target).has_value();
            bool copy = contains_colored(blow_up(target, pattern.n()), pattern).has_value();
            CHECK(hom == copy);
        }
    }
}

TEST_CASE("quotient blow-up contains the source graph")
{
    auto g = corpus::c5();
    auto p = Partition::from_labels(std::vector<int>{ 0, 1, 0, 2, 1 });
    auto q = quotient(g, p);
    auto e = contains_colored(blow_up(q.base, g.n()), g);
    CHECK(e);
}

TEST_CASE("containment is invariant under color and vertex permutations")
{
    int swap[] = { 2, 1 };
    auto graphs = corpus::mixed(5, 3, 11);
    std::mt19937_64 rng{ 5 };
    for (const auto & [hname, host] : graphs)
        for (const auto & [pname, pattern] : graphs) {
            if (pattern.n() > 4)
                continue;
            CAPTURE(hname);
            CAPTURE(pname);
            bool base = contains_colored(host, pattern).has_value();
            CHECK(contains_colored(permute_colors(host, swap), permute_colors(pattern, swap)).has_value() == base);

            std::vector<int> hp(host.n()), pp(pattern.n());
            std::iota(hp.begin(), hp.end(), 0);
            std::iota(pp.begin(), pp.end(), 0);
            std::shuffle(hp.begin(), hp.end(), rng);
            std::shuffle(pp.begin(), pp.end(), rng);
            CHECK(contains_colored(relabel_vertices(host, hp), relabel_vertices(pattern, pp)).has_value() == base);
        }
}

TEST_CASE("containment is deterministic")
{
    auto host = blow_up(t1(), 3);
    auto a = contains_colored(host, corpus::rb_path());
    auto b = contains_colored(host, corpus::rb_path());
    REQUIRE(a);
    CHECK(*a == *b);
}
