#include "atlas/rootsys.hpp"
#include "atlas/tensormod.hpp"
#include "doctest.h"

#include <set>

using namespace atlas;

TEST_CASE("model dimensions")
{
    const auto& m = model();
    CHECK(m.basis.size() == 28);
    CHECK(span_dim(m.g0) == 12);
    CHECK(span_dim(m.g1) == 16);
    CHECK(span_dim(m.k) == 12);
    CHECK(span_dim(m.p) == 16);
}

TEST_CASE("canonical relations")
{
    const auto& m = model();
    CHECK(m.phi(m.e[2]) == scale(m.e[2], -1));
    CHECK(m.phi(m.e[1]) == m.e[1]);
    CHECK(m.theta(m.h[1]) == scale(m.h[1], -1));
    CHECK(bracket(m.h[1], m.e[1]) == scale(m.e[1], 2));
    CHECK(bracket(m.e[1], m.f[2]).is_zero());
    CHECK(bracket(m.e[3], m.e[3]).is_zero());
    for (int i = 1; i <= 4; ++i) {
        CHECK(bracket(m.e[i], m.f[i]) == m.h[i]);
        CHECK(m.theta(m.e[i]) == scale(m.f[i], -1));
    }
}

TEST_CASE("decompose splits into graded parts")
{
    const auto& m = model();
    auto d = decompose(m.e[2]);
    CHECK(d.g1 == m.e[2]);
    CHECK(d.g0.is_zero());
    auto d1 = decompose(m.h[1]);
    CHECK(d1.g0 == m.h[1]);
    auto z = decompose(zero8());
    CHECK(z.g0.is_zero());
    CHECK(z.p.is_zero());
}

TEST_CASE("Jacobi identity on the basis")
{
    const auto& b = model().basis;
    for (size_t i = 0; i < b.size(); i += 3)
        for (size_t j = 0; j < b.size(); j += 2)
            for (size_t k = 0; k < b.size(); ++k) {
                QMatrix s = bracket(b[i], bracket(b[j], b[k])) + bracket(b[j], bracket(b[k], b[i])) +
                            bracket(b[k], bracket(b[i], b[j]));
                REQUIRE(s.is_zero());
            }
}

TEST_CASE("theta and phi are commuting involutive automorphisms")
{
    const auto& m = model();
    for (const auto& x : m.basis) {
        CHECK(m.theta(m.theta(x)) == x);
        CHECK(m.phi(m.phi(x)) == x);
        CHECK(m.theta(m.phi(x)) == m.phi(m.theta(x)));
        for (const auto& y : m.basis) {
            CHECK(m.theta(bracket(x, y)) == bracket(m.theta(x), m.theta(y)));
            CHECK(m.phi(bracket(x, y)) == bracket(m.phi(x), m.phi(y)));
        }
    }
}

TEST_CASE("nilpotency and centralizers")
{
    const auto& m = model();
    CHECK(is_nilpotent(m.e[1]));
    CHECK_FALSE(is_nilpotent(m.h[1]));
    CHECK(centralizer(m.g0, {zero8()}).size() == 12);
    CHECK(orbit_dim(sigma(parse_sign_expr("(++--)"))) == 5);
    auto row29 = sigma(parse_sign_expr("(++++) + (+-+-) + (+--+) + (-+--)"));
    CHECK(centralizer(m.g0, {row29}).empty());
}

TEST_CASE("sl2 completion")
{
    const auto& m = model();
    auto t = complete_to_sl2(m.e[2]);
    CHECK(is_sl2_triple(t.h, t.e, t.f));
    CHECK(bracket(t.h, m.e[2]) == scale(m.e[2], 2));
    CHECK_THROWS_AS(complete_to_sl2(zero8()), std::invalid_argument);
    CHECK_THROWS_AS(complete_to_sl2(m.h[1]), std::invalid_argument);
    auto r1 = complete_to_sl2(sigma(parse_sign_expr("(++--)")));
    CHECK(gamma_label(r1.h) == Label{1, 1, 1, 1});
    CHECK(alpha_label(r1.h) == Label{0, 1, 0, 0});
}

TEST_CASE("Cayley triples")
{
    const auto& m = model();
    Sl2Triple t{m.h[1], m.e[1], m.f[1]};
    CHECK(verify_cayley(t, false));
    CHECK_FALSE(verify_cayley(t));
    Sl2Triple bad{m.h[1], m.e[1], scale(m.f[1], 2)};
    CHECK_FALSE(verify_cayley(bad));
}

TEST_CASE("real rank")
{
    const auto& m = model();
    CHECK(real_rank(m.g0) == 4);
    CHECK(real_rank({root_vector({1, 0, 0, 0}) - root_vector({-1, 0, 0, 0})}) == 0);
    const auto& ft = factor_triples();
    CHECK(real_rank({ft[0].H, ft[0].E, ft[0].F}) == 1);
    CHECK_THROWS_AS(real_rank({m.e[1]}), std::invalid_argument);
}

TEST_CASE("root system and Weyl groups")
{
    const auto& r = roots();
    CHECK(r.all.size() == 24);
    CHECK(r.phi0.size() == 8);
    CHECK(r.phi1.size() == 16);
    CHECK(weyl_W().size() == 192);
    CHECK(weyl_W0().size() == 16);
    for (const auto& w : weyl_W())
        for (const auto& a : r.all)
            CHECK(is_root(w.apply_root(a)));
    for (const auto& c : r.all) {
        CHECK(from_eps(to_eps(c)) == c);
        const auto& x = root_vector(c);
        CHECK(bracket(coroot(c), x) == scale(x, 2));
        CHECK(model().phi(x) == scale(x, in_phi1(c) ? -1 : 1));
    }
    std::array<FactorKind, 4> split{FactorKind::split, FactorKind::split, FactorKind::split, FactorKind::split};
    CHECK(real_weyl(split).size() == 16);
}

TEST_CASE("labels are Weyl invariant")
{
    std::array<Q, 4> x{3, 1, 1, -1};
    Label a = alpha_label_torus(x);
    Label g = gamma_label_torus(x);
    for (const auto& w : weyl_W()) {
        auto wx = x;
        for (int i = 0; i < 4; ++i)
            wx[i] = w.sign[i] * x[w.perm[i]];
        CHECK(alpha_label_torus(wx) == a);
    }
    for (const auto& w : weyl_W0()) {
        auto wx = x;
        for (int i = 0; i < 4; ++i)
            wx[i] = w.sign[i] * x[w.perm[i]];
        CHECK(gamma_label_torus(wx) == g);
    }
}
