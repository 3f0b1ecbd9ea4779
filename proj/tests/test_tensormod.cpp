#include "atlas/rootsys.hpp"
#include "atlas/tensormod.hpp"
#include "doctest.h"

#include <random>

using namespace atlas;

TEST_CASE("parser accepts the sign-expression grammar")
{
    auto v = parse_sign_expr("(++--) - (---+)");
    CHECK(v.support_size() == 2);
    CHECK(v[tuple_from_string("++--")] == 1);
    CHECK(v[tuple_from_string("---+")] == -1);
    CHECK(parse_sign_expr("(+ + - -)") == parse_sign_expr("(++--)"));
    CHECK(parse_sign_expr("(+,+,-,-)") == parse_sign_expr("(++--)"));
    CHECK(parse_sign_expr(" 3/6 * (++--) + 2(-+-+)") ==
          TensorElement::basis(tuple_from_string("++--"), make_q(1, 2)) +
              TensorElement::basis(tuple_from_string("-+-+"), 2));
    CHECK(parse_sign_expr("-(-+--) - (++--)")[tuple_from_string("-+--")] == -1);
}

TEST_CASE("parser rejects malformed input")
{
    CHECK_THROWS_AS(parse_sign_expr("(+++)"), ParseError);
    CHECK_THROWS_AS(parse_sign_expr("(+++++)"), ParseError);
    CHECK_THROWS_AS(parse_sign_expr(""), ParseError);
    CHECK_THROWS_AS(parse_sign_expr("(++--) (--++)"), ParseError);
    CHECK_THROWS_AS(parse_sign_expr("(+,,+--)"), ParseError);
    CHECK_THROWS_AS(parse_sign_expr("(++--,)"), ParseError);
    CHECK_THROWS_AS(parse_sign_expr("1/0(++--)"), ParseError);
    CHECK_THROWS_AS(parse_sign_expr("(++-x)"), ParseError);
}

TEST_CASE("canonical serialization round-trips")
{
    auto v = parse_sign_expr("(---+) + 4/2*(++--) - 1/3 (+-+-)");
    CHECK(to_string(v) == "2*(++--) - 1/3*(+-+-) + (---+)");
    CHECK(parse_sign_expr(to_string(v)) == v);
    CHECK(to_string(TensorElement()) == "0");
}

TEST_CASE("action of diagonal and identity elements")
{
    Q l = 3;
    GroupElement4 g = GroupElement4::identity();
    g.g[0] = mat2(l, 0, 0, 1 / l);
    auto v = parse_sign_expr("(-++-)");
    CHECK(act(g, v) == v * (1 / l));
    auto w = parse_sign_expr("(+++-)");
    CHECK(act(g, w) == w * l);
    CHECK(act(GroupElement4::identity(), v) == v);
}

TEST_CASE("J x J x I x J maps the two split sl3 candidates")
{
    GroupElement4 g;
    QMatrix J = mat2(0, 1, -1, 0);
    g.g = {J, J, QMatrix::identity(2), J};
    CHECK(act(g, parse_sign_expr("(++--) - (---+)")) == parse_sign_expr("(++--) + (---+)"));
}

TEST_CASE("sigma matches the calibrated dictionary")
{
    CHECK(sigma(parse_sign_expr("-(-++-)")) == root_vector({0, 1, 1, 0}));
    CHECK(sigma(parse_sign_expr("(++-+)")) == root_vector({1, 1, 0, 1}));
    CHECK(sigma(parse_sign_expr("(+---)")) == root_vector({0, -1, 0, 0}));
    CHECK(sigma(parse_sign_expr("(----)")) == root_vector({-1, -1, 0, 0}));
    CHECK(sigma(parse_sign_expr("-(++--)")) == root_vector({1, 1, 1, 1}));
    CHECK(sigma(parse_sign_expr("-(---+)")) == root_vector({-1, -1, -1, 0}));
}

TEST_CASE("sigma is a weight-preserving bijection onto g1")
{
    const auto& m = model();
    const auto& ft = factor_triples();
    for (int t = 0; t < 16; ++t) {
        auto x = sigma(TensorElement::basis(t));
        CHECK(m.phi(x) == scale(x, -1));
        CHECK(sigma_inverse(x) == TensorElement::basis(t));
        for (int k = 0; k < 4; ++k)
            CHECK(bracket(ft[k].H, x) == scale(x, tuple_sign(t, k)));
    }
    CHECK_THROWS_AS(sigma_inverse(m.h[1]), std::invalid_argument);
}

static GroupElement4 random_group_element(std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-3, 3);
    GroupElement4 g;
    for (auto& m : g.g) {
        for (;;) {
            Q a = d(rng), b = d(rng), c = d(rng);
            if (a == 0 && c == 0)
                continue;
            if (sgn(c) != 0) {
                Q dd = d(rng);
                // ad - bc = 1 fixes b
                m = mat2(a, (a * dd - 1) / c, c, dd);
            } else {
                m = mat2(a, b, 0, 1 / a);
            }
            break;
        }
    }
    return g;
}

TEST_CASE("intertwining on random rational pairs")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_group_element(rng);
        REQUIRE(g.unimodular());
        TensorElement v;
        for (int t = 0; t < 16; ++t)
            if (d(rng) > 0)
                v[t] = d(rng);
        auto x = sigma(v);
        CHECK(sigma(act(g, v)) == adjoint_action(g, x));
        CHECK(lift_to_g0_action(g, x) == adjoint_action(g, x));
        CHECK(is_nilpotent(sigma(act(g, v))) == is_nilpotent(x));
    }
}

TEST_CASE("unipotent lift equals exp(ad e)")
{
    const auto& ft = factor_triples();
    GroupElement4 g = GroupElement4::identity();
    g.g[0] = mat2(1, make_q(2, 3), 0, 1);
    auto x = sigma(parse_sign_expr("(-+-+) + (----)"));
    CHECK(lift_to_g0_action(g, x) == exp_ad(ft[0].E, make_q(2, 3), x));
    CHECK(lift_to_g0_action(GroupElement4::identity(), x) == x);
}

TEST_CASE("g0 factor matrices")
{
    const auto& m = model();
    for (int k = 0; k < 4; ++k) {
        auto a = g0_factor_matrices(m.g0[3 * k]);
        int nonzero = 0;
        for (const auto& x : a)
            nonzero += !x.is_zero();
        CHECK(nonzero == 1);
    }
    std::array<QMatrix, 4> a = g0_factor_matrices(m.g0[0] + m.g0[4] + m.g0[11]);
    auto v = parse_sign_expr("(++--) - 2*(+-+-) + (---+)");
    CHECK(sigma(derive(a, v)) == bracket(m.g0[0] + m.g0[4] + m.g0[11], sigma(v)));
    CHECK_THROWS_AS(g0_factor_matrices(m.g1[0]), std::invalid_argument);
}
