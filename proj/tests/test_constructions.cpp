#include "corpus.hpp"
#include "oracles.hpp"

#include "mextremal/coloring.hpp"
#include "mextremal/constructions.hpp"
#include "mextremal/containment.hpp"
#include "mextremal/error.hpp"
#include "mextremal/reduced.hpp"

#include <doctest.h>

#include <set>

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

auto binom2(int n) -> int
{
    return n * (n - 1) / 2;
}

}

TEST_CASE("turan graphs")
{
    auto k22 = turan_graph(4, 2);
    CHECK(k22.total_edges() == 4);
    CHECK(! k22.adjacent(0, 1));
    CHECK(turan_graph(5, 5) == corpus::mono_clique(5, 1));
    CHECK(turan_graph(6, 3).total_edges() == 12);
    CHECK(turan_graph(7, 3).total_edges() == 16);
    CHECK(chromatic_number(turan_graph(7, 3)) == 3);
    CHECK_THROWS_AS(turan_graph(3, 4), Error);
}

TEST_CASE("one-factorizations")
{
    auto f2 = one_factorization(2);
    REQUIRE(f2.classes.size() == 1);
    CHECK(f2.classes[0] == std::vector<std::pair<int, int>>{ { 0, 1 } });

    CHECK(kind_of([] { one_factorization(3); }) == ErrorKind::OddR);

    for (int r = 2 ; r <= 12 ; r += 2) {
        CAPTURE(r);
        auto f = one_factorization(r);
        CHECK(static_cast<int>(f.classes.size()) == r - 1);
        std::set<std::pair<int, int>> all;
        for (const auto & matching : f.classes) {
            CHECK(static_cast<int>(matching.size()) == r / 2);
            std::set<int> covered;
            for (auto [a, b] : matching) {
                CHECK(a < b);
                covered.insert(a);
                covered.insert(b);
                all.insert({ a, b });
            }
            CHECK(static_cast<int>(covered.size()) == r);
        }
        CHECK(static_cast<int>(all.size()) == binom2(r));
        for (int u = 0 ; u < r ; ++u)
            for (int v = u + 1 ; v < r ; ++v)
                CHECK(f.color_of(u, v) >= 0);
    }
}

TEST_CASE("random gadgets")
{
    for (std::uint64_t seed = 0 ; seed < 5 ; ++seed) {
        auto g = gadget_coloring({ 1, 3, 1, seed });
        CHECK(g.n() == 2);
        CHECK(multiplicity(g.colors(0, 1)) == 1);
    }
    auto a = gadget_coloring({ 6, 2, 2, 42 });
    CHECK(a == gadget_coloring({ 6, 2, 2, 42 }));
    CHECK(a.pair_count() == 36);
    CHECK(a.total_edges() == 36);
    CHECK(! a.adjacent(0, 1));
}

TEST_CASE("gadget verification")
{
    auto perm = gadget_permutation_complement(3);
    auto pass = verify_gadget(perm, 2);
    CHECK(pass.pass);
    CHECK(pass.checked == 9);
    CHECK(! verify_gadget(perm, 1).pass);

    for (int s = 1 ; s <= 3 ; ++s)
        CHECK(! verify_gadget(gadget_monochrome(3, 2), s).pass);

    auto board = verify_gadget(gadget_checkerboard(4), 2);
    CHECK(! board.pass);
    CHECK(board.rows == std::vector<int>{ 0, 2 });
    CHECK(board.cols == std::vector<int>{ 0, 2 });
    CHECK(! spans_all_colors(gadget_checkerboard(4), board.rows, board.cols));
    CHECK(! spans_all_colors(gadget_checkerboard(4), { 1, 3 }, { 1, 3 }));

    CHECK(verify_gadget(perm, 2, GadgetSampling{ 200, 1 }).pass);
    auto sampled = verify_gadget(gadget_monochrome(4, 2), 2, GadgetSampling{ 10, 1 });
    CHECK(! sampled.pass);
    CHECK(sampled.rows.size() == 2);

    CHECK(kind_of([] { verify_gadget(corpus::mono_clique(4), 1); }) == ErrorKind::NotCompleteBipartite);
    CHECK(kind_of([] { verify_gadget(gadget_monochrome(40, 2), 20); }) == ErrorKind::ExactTooLarge);
    CHECK_NOTHROW(verify_gadget(gadget_monochrome(40, 2), 20, GadgetSampling{ 3, 0 }));
}

TEST_CASE("gadget parameter helpers")
{
    CHECK(gadget_subset_size_claim(32, 2, 2) == 2);
    CHECK(gadget_subset_size_proof(32, 2, 2) == 2);
    CHECK(gadget_subset_size_claim(100, 2, 3) == 1);
    CHECK(gadget_subset_size_proof(100, 2, 3) == 3);

    CHECK(gadget_failure_bound(2, 2, 4) >= 1.0);
    bool found = false;
    for (int t = 2 ; t <= 400 && ! found ; ++t)
        found = gadget_failure_bound(2, 2, t) < 1.0;
    CHECK(found);
}

TEST_CASE("graph H")
{
    auto one = graph_H(2, 2, 1, 0);
    CHECK(one.n() == 2);
    CHECK(one.pair_count() == 1);

    auto h = graph_H(2, 3, 2, 9);
    CHECK(h.n() == 6);
    CHECK(h.total_edges() == 12);
    CHECK(h == graph_H(2, 3, 2, 9));
    CHECK(chromatic_number(h) == 3);
    CHECK(chromatic_number(graph_H(2, 4, 2, 9)) == 4);

    for (auto [r, k, t] : { std::tuple{ 2, 3, 2 }, std::tuple{ 3, 4, 3 }, std::tuple{ 2, 2, 5 } }) {
        auto g = graph_H(r, k, t, 1);
        for (int u = 0 ; u < g.n() ; ++u)
            for (int v = u + 1 ; v < g.n() ; ++v)
                CHECK(g.adjacent(u, v) == (u / t != v / t));
    }

    auto shared = graph_H(3, gadget_permutation_complement(3));
    CHECK(shared.n() == 9);
    CHECK(shared.colors(0, 3 + 1) == color_bit(2));
    CHECK(shared.colors(3, 6 + 1) == color_bit(2));
}

TEST_CASE("graph H prime")
{
    auto base = corpus::from_masks(2, 2, { { 0, 1, color_bit(blue) } });
    auto g = graph_H_prime(base, 1, red);
    CHECK(g.n() == 4);
    CHECK(g.edge_count(blue) == 1);
    CHECK(g.edge_count(red) == 5);

    for (const auto & h : { graph_H(2, 3, 2, 1), graph_H(2, 2, 2, 4), corpus::c5() })
        for (int m = 1 ; m <= 2 ; ++m)
            CHECK(chromatic_number(graph_H_prime(h, m, red)) == chromatic_number(h) + 2 * m);

    auto hp = graph_H_prime(graph_H(2, 3, 2, 1), 1, red);
    int value = reduced_max_matching(hp).value;
    CHECK(value >= 1);
    CHECK(value == oracle::reduced_max_matching(hp));
    CHECK(kind_of([&] { graph_H_prime(base, 1, 3); }) == ErrorKind::ColorOutOfRange);
}

TEST_CASE("lower-bound family")
{
    auto f = lower_bound_family(2, 3, 1);
    CHECK(f.graph.n() == 4);
    CHECK(f.graph.edge_count(2) == 6);
    CHECK(f.graph.edge_count(1) == 4);

    auto g = lower_bound_family(2, 3, 2);
    CHECK(g.graph.n() == 8);
    CHECK(g.graph.edge_count(2) == 24);
    CHECK(g.graph.edge_count(1) == 20);

    CHECK(kind_of([] { lower_bound_family(3, 3, 1); }) == ErrorKind::OddR);

    for (int r : { 2, 4 })
        for (int k = 2 ; k <= 4 ; ++k)
            for (int m = 1 ; m <= 3 ; ++m) {
                CAPTURE(r);
                CAPTURE(k);
                CAPTURE(m);
                auto fam = lower_bound_family(r, k, m);
                int n = (k - 1) * r * m;
                CHECK(fam.graph.n() == n);
                CHECK(binom2(n) - fam.graph.edge_count(r) == (k - 1) * r * binom2(m));
                for (int c = 1 ; c < r ; ++c)
                    CHECK(binom2(n) - fam.graph.edge_count(c) == (k - 1) * (r / 2) * m * m);
                for (int id = 0 ; id < n ; ++id) {
                    auto p = fam.coords(id);
                    CHECK(fam.vertex(p.x, p.y, p.z) == id);
                }
            }
}

TEST_CASE("lower-bound family avoids the small gadget")
{
    auto fam = lower_bound_family(2, 2, 3);
    auto gadget = gadget_permutation_complement(3);
    CHECK(! contains_colored(fam.graph, gadget));
    CHECK(! oracle::contains(fam.graph, gadget));
}

TEST_CASE("bicolored triangles and cycles")
{
    auto a = t1();
    CHECK(a.colors(0, 1) == 3);
    CHECK(a.colors(0, 2) == color_bit(red));
    CHECK(a.colors(1, 2) == color_bit(red));
    auto b = t2();
    CHECK(b.colors(0, 1) == 3);
    CHECK(b.colors(0, 2) == color_bit(red));
    CHECK(b.colors(1, 2) == color_bit(blue));
    CHECK(contains_colored(a, corpus::rb_path()));

    CHECK(cycle_pattern(3, "RRR") == corpus::mono_clique(3));
    auto c5 = cycle_pattern(5, "RRRRB");
    CHECK(c5.edge_count(red) == 4);
    CHECK(c5.colors(0, 4) == color_bit(blue));
    CHECK(hom_exists(c5, t2()));
    CHECK(kind_of([] { cycle_pattern(4, "RRR"); }) == ErrorKind::LengthMismatch);
    CHECK(kind_of([] { cycle_pattern(3, "RGB"); }) == ErrorKind::InvalidArgument);
}
