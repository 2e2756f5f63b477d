#include <doctest.h>

#include "lindq/bounds.hpp"
#include "lindq/hkq.hpp"
#include "lindq/lind.hpp"
#include "oracles.hpp"

using namespace lindq;

TEST_CASE("chromatic bound closed form")
{
    CHECK(chromatic_bound_from(2, 0) == 0);
    CHECK(chromatic_bound_from(2, 1) == 1);
    CHECK(chromatic_bound_from(2, 3) == 2);
    CHECK(chromatic_bound_from(2, 4) == 3);
    CHECK(chromatic_bound_from(3, 4) == 2);
    CHECK(chromatic_bound_from(3, 5) == 3);
    for (int q : {2, 3, 4, 5})
        for (int chi = 0; chi < 200; ++chi)
            CHECK(chromatic_bound_from(q, chi) == oracle::chromatic_bound(q, chi));
}

TEST_CASE("clique ratio bound closed form")
{
    CHECK(clique_ratio_bound_from(3, 12, 1) == 3);
    CHECK(clique_ratio_bound_from(3, 12, 12) == 1);
    CHECK(clique_ratio_bound_from(5, 4, 4) == 1);
    CHECK(clique_ratio_bound_from(5, 4, 3) == 2);
    CHECK(clique_ratio_bound_from(2, 0, 0) == 0);
}

TEST_CASE("generic bound reproduces the specialised bounds")
{
    for (int q : {2, 3, 4})
        for (unsigned code = 0; code < 4096; code += 7) {
            const auto g = digraph_from_code(4, code);
            const int chi = generic_bound(
                g, [](const Digraph& x) { return Rational{chromatic_number(complement(x)).chromatic_number, 1}; },
                [q](int k) { return chromatic_upper(q, k); });
            CHECK(chi == chromatic_bound(g, gf::make_field(q)));
            const int ratio = generic_bound(
                g,
                [](const Digraph& x) {
                    return Rational{x.size(), std::max(1, clique_number(x))};
                },
                [q](int k) { return clique_ratio_upper(q, k); });
            CHECK(ratio == clique_ratio_bound(g, gf::make_field(q)));
        }
}

TEST_CASE("sandwich: bounds below lind, lind below chromatic number of the complement")
{
    for (int q : {2, 3}) {
        const auto f = gf::make_field(q);
        for (unsigned code = 0; code < 4096; code += 3) {
            const auto g = digraph_from_code(4, code);
            const int exact = minrank(f, g).rank;
            CHECK(chromatic_bound(g, f) <= exact);
            CHECK(clique_ratio_bound(g, f) <= exact);
            for (int l : {2, 3})
                if (const auto b = l_colorable_bound(g, f, l))
                    CHECK(*b <= exact);
            CHECK(exact <= chromatic_number(complement(g)).chromatic_number);
        }
    }
}

TEST_CASE("ratio inequality against H_k^q")
{
    const auto f = gf::make_field(2);
    const auto h = construct_hkq(f, 2);
    const auto k2 = complete_digraph(2);
    for (unsigned code = 0; code < 4096; code += 97) {
        const auto g = digraph_from_code(4, code);
        if (minrank(f, g).rank > 2)
            continue;
        const auto r = ratio_inequality_check(g, h, k2);
        CHECK(!r.premise);
        const int n_colorable = oracle::largest_induced_hom(complement(g), k2);
        CHECK(r.graph_ratio.num * n_colorable == r.graph_ratio.den * g.size());
    }
}

TEST_CASE("bound report")
{
    const auto f = gf::make_field(3);
    const auto rep = bound_report(directed_cycle(5), f, {2, 3}, true);
    REQUIRE(rep.exact);
    CHECK(*rep.exact == 4);
    CHECK(rep.consistent.value_or(false));
    CHECK(rep.lower_bound <= *rep.exact);
    for (std::size_t i = 1; i < rep.bounds.size(); ++i)
        CHECK(rep.bounds[i - 1].name < rep.bounds[i].name);

    const auto empty = bound_report(Digraph(0), f, {2}, true);
    CHECK(empty.lower_bound == 0);
    CHECK(*empty.exact == 0);
}
