#include <doctest.h>

#include <random>
#include <set>

#include "lindq/digraph.hpp"
#include "lindq/errors.hpp"
#include "oracles.hpp"

using namespace lindq;

namespace {

Digraph random_digraph(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution arc(p);
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && arc(rng))
                g.add_arc(u, v);
    return g;
}

}  // namespace

TEST_CASE("basic structure")
{
    Digraph g(3);
    g.add_arc(0, 1);
    g.add_arc(1, 0);
    g.add_arc(1, 2);
    CHECK(g.arc_count() == 3);
    CHECK(g.bidirected(0, 1));
    CHECK(!g.bidirected(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_THROWS_AS(g.add_arc(0, 0), InvalidVertex);
    CHECK_THROWS_AS(g.add_arc(0, 3), InvalidVertex);
    const auto c = complement(g);
    CHECK(c.arc_count() == 6 - 3);
    CHECK(complement(c) == g);
    CHECK(directed_cycle(4).arc_count() == 4);
    CHECK(complete_digraph(4).arc_count() == 12);
    CHECK(edgeless(4).arc_count() == 0);
}

TEST_CASE("digraph_from_code enumerates every labeled digraph once")
{
    std::set<std::vector<std::pair<int, int>>> seen;
    for (unsigned code = 0; code < 64; ++code)
        seen.insert(digraph_from_code(3, code).arcs());
    CHECK(seen.size() == 64);
}

TEST_CASE("exact parameters agree with brute force on all 3-vertex and sampled 5-8 vertex graphs")
{
    auto check = [](const Digraph& g) {
        CHECK(clique_number(g) == oracle::clique_number(g));
        CHECK(independence_number(g) == oracle::independence_number(g));
        CHECK(independence_number(g) == clique_number(complement(g)));
        const auto chi = chromatic_number(g);
        CHECK(chi.chromatic_number == oracle::chromatic_number(g));
        CHECK(is_proper_coloring(g, chi.coloring));
        CHECK(chi.coloring.num_colors == chi.chromatic_number);
        const auto clique = maximum_clique(g);
        CHECK(oracle::subset_is_clique(g, clique));
        CHECK(static_cast<int>(clique.size()) == clique_number(g));
        const auto indep = maximum_independent_set(g);
        CHECK(is_independent_set(g, indep));
        CHECK(static_cast<int>(indep.size()) == independence_number(g));
    };
    for (unsigned code = 0; code < 64; ++code)
        check(digraph_from_code(3, code));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 120; ++trial)
        check(random_digraph(rng, 5 + trial % 4, 0.2 + 0.15 * (trial % 5)));
}

TEST_CASE("largest induced hom subgraph agrees with brute force")
{
    std::mt19937 rng(5);
    const Digraph k2 = complete_digraph(2);
    const Digraph c3 = directed_cycle(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Digraph g = random_digraph(rng, 4 + trial % 3, 0.4);
        for (const Digraph* k : {&k2, &c3}) {
            const auto r = largest_induced_hom_subgraph(g, *k);
            CHECK(r.size == oracle::largest_induced_hom(g, *k));
            CHECK(static_cast<int>(r.vertices.size()) == r.size);
            CHECK(oracle::naive_hom_exists(induced_subgraph(g, r.vertices), *k));
        }
    }
}

TEST_CASE("core is idempotent and hom-equivalent")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const Digraph g = random_digraph(rng, 3 + trial % 4, 0.35);
        const Digraph c = core(g);
        CHECK(oracle::naive_hom_exists(g, c));
        CHECK(oracle::naive_hom_exists(c, g));
        CHECK(core(c).size() == c.size());
    }
    CHECK(core(directed_cycle(5)).size() == 5);
    CHECK(is_directed_cycle(directed_cycle(5)));
    CHECK(!is_directed_cycle(complete_digraph(3)));
    Digraph two_cycles(6);
    for (int i = 0; i < 3; ++i) {
        two_cycles.add_arc(i, (i + 1) % 3);
        two_cycles.add_arc(3 + i, 3 + (i + 1) % 3);
    }
    CHECK(core(two_cycles).size() == 3);
}

TEST_CASE("isomorphism")
{
    Digraph a = directed_cycle(4);
    Digraph b(4);
    b.add_arc(0, 2);
    b.add_arc(2, 1);
    b.add_arc(1, 3);
    b.add_arc(3, 0);
    CHECK(are_isomorphic(a, b));
    b.remove_arc(3, 0);
    b.add_arc(0, 3);
    CHECK(!are_isomorphic(a, b));
}

TEST_CASE("caps are enforced")
{
    Caps caps;
    caps.clique_max_n = 4;
    CHECK_THROWS_AS(clique_number(edgeless(5), caps), SizeLimitExceeded);
    CHECK_THROWS_AS(chromatic_number(edgeless(5), caps), SizeLimitExceeded);
}
