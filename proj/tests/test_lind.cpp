#include <doctest.h>

#include <random>
#include <set>

#include "lindq/errors.hpp"
#include "lindq/lind.hpp"
#include "oracles.hpp"

using namespace lindq;

TEST_CASE("subspace enumeration counts match Gaussian binomials")
{
    for (int q : {2, 3, 4})
        for (int m = 1; m <= 4; ++m)
            for (int k = 0; k <= m; ++k) {
                const auto f = gf::make_field(q);
                long long count = 0;
                std::set<std::vector<int>> seen;
                for_each_subspace(f, m, k, [&](const gf::Matrix& b) {
                    ++count;
                    CHECK(gf::rank(f, b) == k);
                    std::vector<int> flat(b.data(), b.data() + b.size());
                    seen.insert(flat);
                    return false;
                });
                CHECK(count == gaussian_binomial(q, m, k));
                CHECK(static_cast<long long>(seen.size()) == count);
            }
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(3, 3, 1) == 13);
}

TEST_CASE("minrank agrees with naive matrix enumeration")
{
    for (int p : {2, 3}) {
        const auto f = gf::make_field(p);
        for (int m = 1; m <= 3; ++m)
            for (unsigned code = 0; code < (1u << (m * (m - 1))); ++code) {
                const auto g = digraph_from_code(m, code);
                const auto r = minrank(f, g);
                CHECK(r.rank == oracle::naive_minrank(g, p));
                CHECK(is_fitting_matrix(f, g, r.fitting));
                CHECK(gf::rank(f, r.fitting) == r.rank);
            }
    }
}

TEST_CASE("known values")
{
    const auto f2 = gf::make_field(2);
    CHECK(minrank(f2, complete_digraph(5)).rank == 1);
    CHECK(minrank(f2, edgeless(4)).rank == 4);
    CHECK(minrank(f2, directed_cycle(5)).rank == 4);
    CHECK(minrank(f2, Digraph(0)).rank == 0);
    CHECK(lind_via_hom(Digraph(0), f2).lind == 0);
}

TEST_CASE("both routes agree and produce valid codes")
{
    std::mt19937 rng(19);
    for (int q : {2, 3, 4}) {
        const auto f = gf::make_field(q);
        HkqFamily family(f);
        std::uniform_int_distribution<unsigned> pick(0, 4095);
        for (int trial = 0; trial < (q == 2 ? 200 : 40); ++trial) {
            const auto g = digraph_from_code(4, pick(rng));
            const auto via_matrix = minrank(f, g);
            const auto via_hom = lind_via_hom(g, family);
            CHECK(via_matrix.rank == via_hom.lind);
            const auto& h = family.graph(via_hom.lind);
            CHECK(is_homomorphism(complement(g), h.graph().size() ? complement(h.graph()) : h.graph(),
                                  via_hom.witness));
            const auto code = code_from_hom_witness(g, h, via_hom.witness);
            CHECK(code.length() == via_hom.lind);
            CHECK(is_valid_linear_code(g, code));
            const auto dec = decoders_from_hom_witness(h, via_hom.witness);
            for (int i = 0; i < g.size(); ++i) {
                gf::Vector column = code.encoding.col(i);
                CHECK(gf::inner(f, dec[i], column) != 0);
                for (int j = 0; j < g.size(); ++j)
                    if (j != i && !g.has_arc(i, j)) {
                        gf::Vector other = code.encoding.col(j);
                        CHECK(gf::inner(f, dec[i], other) == 0);
                    }
            }
        }
    }
}

TEST_CASE("monotonicity under the preorder")
{
    const auto f = gf::make_field(2);
    std::vector<Digraph> all;
    std::vector<int> value;
    for (int m = 1; m <= 3; ++m)
        for (unsigned code = 0; code < (1u << (m * (m - 1))); ++code) {
            all.push_back(digraph_from_code(m, code));
            value.push_back(minrank(f, all.back()).rank);
        }
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b)
            if (oracle::naive_hom_exists(complement(all[a]), complement(all[b])))
                CHECK(value[a] <= value[b]);

    std::mt19937 rng(23);
    std::uniform_int_distribution<unsigned> pick(0, 4095);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = digraph_from_code(4, pick(rng));
        const auto h = digraph_from_code(4, pick(rng));
        if (preorder_leq(g, h))
            CHECK(minrank(f, g).rank <= minrank(f, h).rank);
    }
}

TEST_CASE("side information round trip and code validity")
{
    const auto g = from_side_information({{1}, {2}, {0}});
    CHECK(g == directed_cycle(3));
    CHECK(side_information(g, 1) == std::vector<int>{2});
    const auto f = gf::make_field(2);
    LinearIndexCode uncoded{f, gf::Matrix::Identity(3, 3)};
    CHECK(is_valid_linear_code(g, uncoded));
    gf::Matrix one(1, 3);
    one << 1, 1, 1;
    CHECK(!is_valid_linear_code(g, LinearIndexCode{f, one}));
    CHECK(is_valid_linear_code(complete_digraph(3), LinearIndexCode{f, one}));
}

TEST_CASE("minrank cap")
{
    Caps caps;
    caps.minrank_max_m = 3;
    CHECK_THROWS_AS(minrank(gf::make_field(2), edgeless(4), caps), SizeLimitExceeded);
}
