#include "atlas/scalar.hpp"
#include "doctest.h"

#include <random>

using namespace atlas;

TEST_CASE("signature of small diagonal matrices")
{
    CHECK(symmetric_signature(QMatrix(4, 4)) == Signature{0, 0});
    CHECK(symmetric_signature(QMatrix::identity(4)) == Signature{4, 0});
    QMatrix d(4, 4);
    d(0, 0) = 1;
    d(1, 1) = -2;
    d(3, 3) = 3;
    CHECK(symmetric_signature(d) == Signature{2, 1});
}

TEST_CASE("signature rejects non-symmetric input")
{
    QMatrix m(2, 2);
    m(0, 1) = 1;
    CHECK_THROWS_AS(symmetric_signature(m), std::invalid_argument);
}

TEST_CASE("signature with zero diagonal uses a 2x2 block")
{
    QMatrix m(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    CHECK(symmetric_signature(m) == Signature{1, 1});
}

TEST_CASE("signature is congruence invariant and flips under negation")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        QMatrix m(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j)
                m(i, j) = m(j, i) = dist(rng) * (trial % 3 == 0 && i == j ? 0 : 1);
        QMatrix g = QMatrix::identity(5);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                g(i, j) = dist(rng);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < i; ++j)
                if (dist(rng) > 1)
                    g(i, j) = make_q(dist(rng), 2);
        if (determinant(g) == 0)
            continue;
        Signature s = symmetric_signature(m);
        CHECK(symmetric_signature(g * m * g.transpose()) == s);
        Signature n = symmetric_signature(m * QMatrix::identity(5) * QMatrix::identity(5) - m - m);
        CHECK(n.plus == s.minus);
        CHECK(n.minus == s.plus);
    }
}

TEST_CASE("polynomial arithmetic")
{
    auto x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1);
    MultiPoly sq(2);
    sq.add_term({2, 0}, 1);
    CHECK(x * x == sq);
    CHECK((x + y) + (-y) == x);
    auto t = [](int i) { return MultiPoly::var(4, i); };
    auto p = t(0) * t(3) - t(1) * t(2);
    CHECK(p * MultiPoly::constant(4, 1) == p);
    CHECK_THROWS(x + MultiPoly::var(3, 0));
}

TEST_CASE("polynomial ring axioms on random instances")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-4, 4), e(0, 2);
    auto rnd = [&] {
        MultiPoly p(3);
        for (int k = 0; k < 4; ++k)
            p.add_term({e(rng), e(rng), e(rng)}, c(rng));
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto a = rnd(), b = rnd(), d = rnd();
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a - a == MultiPoly(3));
    }
}

TEST_CASE("exact linear algebra helpers")
{
    QMatrix a = QMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(determinant(a) == -2);
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == QMatrix::identity(2));
    auto cp = charpoly(a);
    CHECK(cp == std::vector<Q>{1, -5, -2});
    CHECK(rational_sqrt(make_q(9, 4)) == make_q(3, 2));
    CHECK_FALSE(rational_sqrt(2));
}
