#include <doctest.h>

#include <random>

#include "lindq/errors.hpp"
#include "lindq/gf.hpp"
#include "oracles.hpp"

using namespace lindq;

namespace {

const int supported[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

gf::Matrix random_matrix(std::mt19937& rng, int q, int r, int c)
{
    std::uniform_int_distribution<int> d(0, q - 1);
    gf::Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m(i, j) = static_cast<gf::Element>(d(rng));
    return m;
}

}  // namespace

TEST_CASE("field tables agree with polynomial arithmetic")
{
    for (int q : supported) {
        const auto f = gf::make_field(q);
        const auto o = oracle::field(q);
        CHECK(f.q() == q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == o.add(a, b));
                CHECK(f.mul(a, b) == o.mul(a, b));
            }
    }
}

TEST_CASE("field axioms hold exhaustively")
{
    for (int q : supported) {
        const auto f = gf::make_field(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("primitive element generates the multiplicative group")
{
    for (int q : supported) {
        const auto f = gf::make_field(q);
        CHECK(f.order(f.primitive_element()) == q - 1);
        for (int a = 1; a < f.primitive_element(); ++a)
            CHECK(f.order(a) < q - 1);
    }
}

TEST_CASE("unsupported orders are rejected")
{
    for (int q : {0, 1, 6, 10, 12, 15, 17, 25})
        CHECK_THROWS_AS(gf::make_field(q), NotAPrimePower);
}

TEST_CASE("normal vectors: count, order, normalisation")
{
    for (int q : {2, 3, 4, 5}) {
        const auto f = gf::make_field(q);
        for (int k = 1; k <= 3; ++k) {
            const auto normals = gf::enumerate_normal_vectors(f, k);
            long long expected = 0;
            for (int i = 0, p = 1; i < k; ++i, p *= q)
                expected += p;
            CHECK(static_cast<long long>(normals.size()) == expected);
            for (std::size_t i = 0; i < normals.size(); ++i) {
                CHECK(gf::is_normal(normals[i]));
                CHECK(gf::normal_index(f, normals[i]) == i);
                if (i)
                    CHECK(gf::lex_less(normals[i - 1], normals[i]));
            }
            for (const auto& v : gf::enumerate_vectors(f, k)) {
                if (gf::is_zero(v)) {
                    CHECK_THROWS_AS(gf::normalize(f, v), ZeroVector);
                    continue;
                }
                const auto n = gf::normalize(f, v);
                CHECK(gf::is_normal(n));
                CHECK(gf::normalize(f, n) == n);
                bool scalar_multiple = false;
                for (int c = 1; c < q; ++c)
                    scalar_multiple |= gf::scale(f, c, n) == v;
                CHECK(scalar_multiple);
            }
        }
    }
    const auto f2 = gf::make_field(2);
    const auto n2 = gf::enumerate_normal_vectors(f2, 2);
    CHECK(n2[0] == gf::unit(2, 1));
    CHECK(n2[1] == gf::unit(2, 0));
}

TEST_CASE("rank agrees with minor-based oracle over prime fields")
{
    std::mt19937 rng(7);
    for (int p : {2, 3, 5}) {
        const auto f = gf::make_field(p);
        for (int trial = 0; trial < 200; ++trial) {
            const int r = 1 + trial % 4;
            const int c = 1 + (trial / 4) % 4;
            const auto m = random_matrix(rng, p, r, c);
            oracle::IntMatrix im(r, std::vector<int>(c));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    im[i][j] = m(i, j);
            CHECK(gf::rank(f, m) == oracle::rank_mod(im, p));
        }
    }
}

TEST_CASE("matrix algebra properties")
{
    std::mt19937 rng(11);
    for (int q : {2, 3, 4, 7, 9}) {
        const auto f = gf::make_field(q);
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_matrix(rng, q, 3, 4);
            const auto b = random_matrix(rng, q, 4, 3);
            const auto ab = gf::multiply(f, a, b);
            CHECK(gf::rank(f, ab) <= std::min(gf::rank(f, a), gf::rank(f, b)));

            const auto ns = gf::nullspace(f, a);
            CHECK(ns.cols() == 4 - gf::rank(f, a));
            const auto zero = gf::multiply(f, a, ns);
            CHECK((zero.array() == 0).all());

            const auto s = random_matrix(rng, q, 3, 3);
            if (gf::determinant(f, s) != 0) {
                CHECK(gf::rank(f, s) == 3);
                const auto inv = gf::invert(f, s);
                const auto id = gf::multiply(f, s, inv);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        CHECK(id(i, j) == (i == j ? 1 : 0));
                gf::Vector x(3);
                x << 1, 0, 1;
                const auto y = gf::multiply(f, s, x);
                const auto solved = gf::solve(f, s, y);
                REQUIRE(solved);
                CHECK(*solved == x);
            } else {
                CHECK(gf::rank(f, s) < 3);
                CHECK_THROWS_AS(gf::invert(f, s), Singular);
            }
        }
    }
}

TEST_CASE("inner product and dimension checks")
{
    const auto f = gf::make_field(3);
    gf::Vector a(2), b(2), c(3);
    a << 1, 2;
    b << 2, 2;
    c << 1, 1, 1;
    CHECK(gf::inner(f, a, b) == (1 * 2 + 2 * 2) % 3);
    CHECK_THROWS_AS(gf::inner(f, a, c), DimensionMismatch);
}
