#include "atlas/carrier.hpp"
#include "atlas/classify.hpp"
#include "atlas/groebner.hpp"
#include "atlas/tables.hpp"
#include "doctest.h"

#include <algorithm>
#include <set>

using namespace atlas;

static MultiPoly T(int n, int i) { return MultiPoly::var(n, i - 1); }

TEST_CASE("A3 three-sets in Phi1")
{
    auto c = a3_census();
    CHECK(c.subsets == 96);
    CHECK(c.orbits == 6);
    CHECK(is_a3_chain({0, 1, 0, 0}, {1, 1, 1, 1}, {-1, -1, -1, 0}));
    CHECK_FALSE(is_a3_chain({0, 1, 0, 0}, {1, 1, 1, 1}, {-1, 0, 0, 0}));
}

TEST_CASE("complex carriers give the 30 complex orbits")
{
    auto orbits = complex_orbits();
    REQUIRE(orbits.size() == 30);
    std::set<int> rows;
    std::multiset<Label> gammas;
    for (const auto& o : orbits) {
        rows.insert(o.table_row);
        gammas.insert(o.gamma);
        CHECK(o.carrier.s0.size() == o.carrier.s1.size());
        const auto& row = table1()[o.table_row - 1];
        CHECK(o.dim == row.dim);
    }
    CHECK(rows.size() == 30);
    CHECK(*rows.begin() == 1);
    std::multiset<Label> expect;
    for (const auto& row : table1())
        expect.insert(gamma_beta_labels()[row.alpha - 1][row.gamma - 1]);
    CHECK(gammas == expect);
}

TEST_CASE("general position polynomials of the hand-built carriers")
{
    auto full = carrier_full_split();
    CHECK(full.s0.size() == 6);
    auto p = general_position_poly(full);
    const int n = 6;
    auto want = (T(n, 2) * T(n, 5) + T(n, 4) * T(n, 6)) * (T(n, 1) * T(n, 5) + T(n, 3) * T(n, 6)) *
                (T(n, 1) * T(n, 4) - T(n, 2) * T(n, 3));
    CHECK(proportional(p, want));

    auto sl3 = carrier_sl3_split();
    CHECK(proportional(general_position_poly(sl3), T(2, 1) * T(2, 2)));

    auto su = carrier_su12();
    CHECK(su.s0.size() == 2);
    auto x = [](const RootC& r) { return root_vector(r); };
    CHECK(su.s1[1] == x({1, 1, 0, 1}) - x({0, 1, 1, 1}) - x({0, -1, 0, 0}) - x({-1, -1, -1, 0}));
    auto whole = su.basis();
    whole.push_back(bracket(su.s1[0], su.s1[1]));
    whole.push_back(model().theta(whole.back()));
    CHECK(span_dim(whole) == 8);
    CHECK(is_subalgebra(whole));
    CHECK(real_rank(whole) == 1);
    CHECK(proportional(general_position_poly(su), T(2, 1) * T(2, 1) + T(2, 2) * T(2, 2)));
    CHECK_FALSE(proportional(general_position_poly(su), T(2, 1) * T(2, 2)));
}

TEST_CASE("reduction of the full carrier: 8 pairwise non-conjugate candidates")
{
    auto c = carrier_full_split();
    auto g = reduce_gamma(c);
    REQUIRE(g.candidates.size() == 8);
    std::set<TensorElement> want;
    for (int j = 0; j < 8; ++j)
        want.insert(parse_sign_expr("(-++-)") + parse_sign_expr("(++-+)") * Q(j & 4 ? -1 : 1) +
                    parse_sign_expr("(+---)") * Q(j & 2 ? -1 : 1) + parse_sign_expr("(----)") * Q(j & 1 ? -1 : 1));
    CHECK(std::set<TensorElement>(g.candidates.begin(), g.candidates.end()) == want);
    for (const auto& v : g.candidates)
        CHECK(corresponds(v, c));
    for (size_t i = 0; i < g.candidates.size(); ++i)
        for (size_t j = i + 1; j < g.candidates.size(); ++j)
            CHECK(decide_conjugacy(g.candidates[i], g.candidates[j]).kind == ConjugacyVerdict::Kind::NotConjugate);
}

TEST_CASE("reduction of the split sl3 carrier: one orbit")
{
    auto c = carrier_sl3_split();
    auto g = reduce_gamma(c);
    REQUIRE(g.candidates.size() == 2);
    CHECK(g.candidates[0] == parse_sign_expr("(++--) + (---+)"));
    CHECK(g.candidates[1] == parse_sign_expr("(++--) - (---+)"));
    for (const auto& v : g.candidates)
        CHECK(corresponds(v, c));
    auto v = decide_conjugacy(g.candidates[1], g.candidates[0]);
    REQUIRE(v.kind == ConjugacyVerdict::Kind::Conjugate);
    CHECK(verify_witness(*v.witness, g.candidates[1], g.candidates[0]));
}

TEST_CASE("reduction of the su(1,2) carrier: one orbit")
{
    auto c = carrier_su12();
    auto g = reduce_gamma(c);
    REQUIRE(g.candidates.size() == 1);
    CHECK(corresponds(g.candidates[0], c));
    CHECK_THROWS_AS(corresponds(parse_sign_expr("(++--)"), c), std::invalid_argument);
}

TEST_CASE("real rank without theta-stability")
{
    const auto& m = model();
    CHECK(real_rank_g0(m.g0) == 4);
    CHECK(real_rank_g0(m.g0) == real_rank(m.g0));
    std::vector<QMatrix> torus;
    for (const auto& ft : factor_triples())
        torus.push_back(ft.H);
    CHECK(real_rank_g0(torus) == real_rank(torus));
    std::vector<QMatrix> compact;
    for (const auto& ft : factor_triples())
        compact.push_back(ft.E - ft.F);
    CHECK(real_rank_g0(compact) == 0);
    CHECK(real_rank(compact) == 0);
    CHECK_THROWS_AS(real_rank_g0({factor_triples()[0].E}), std::invalid_argument);
}

TEST_CASE("real Cartans and root conjugation")
{
    auto ts = real_cartans();
    REQUIRE(ts.size() == 16);
    CHECK(ts[0].compact_dim() == 0);
    CHECK(ts[13].name() == "h0^14");
    CHECK(ts[13].compact_dim() == 3);
    CHECK(ts[13].kinds[2] == FactorKind::split);
    CHECK(ts[15].compact_dim() == 4);
    for (const auto& r : roots().all) {
        auto f = factor_coords(r);
        int nz = 0;
        for (int k = 0; k < 4; ++k)
            nz += f[k] != 0;
        CHECK((nz == 4 || nz == 1));
        CHECK(conjugate_root(r, ts[0]) == r);
        CHECK(conjugate_root(r, ts[15]) == negate(r));
        CHECK(conjugate_root(conjugate_root(r, ts[13]), ts[13]) == r);
    }
}

TEST_CASE("real carriers")
{
    auto ts = real_cartans();
    auto split = enumerate_real_carriers(ts[0]);
    CHECK(split.size() == 30);
    int full = 0;
    bool sl3 = false;
    const RootC b1{1, 1, 1, 1}, b2{-1, -1, -1, 0};
    for (const auto& c : split) {
        CHECK(c.s0.size() == c.s1.size());
        full += c.degree.size() == 24;
        std::set<RootC> deg1;
        for (const auto& [r, d] : c.degree)
            if (d == 1)
                deg1.insert(r);
        for (const auto& w : weyl_W0())
            sl3 = sl3 || (c.degree.size() == 6 && deg1 == std::set<RootC>{w.apply_root(b1), w.apply_root(b2)});
    }
    CHECK(full > 0);
    CHECK(sl3);

    auto su = enumerate_real_carriers(ts[13]);
    REQUIRE_FALSE(su.empty());
    bool a2 = false;
    for (const auto& c : su) {
        CHECK(c.cartan == "h0^14");
        int n0 = 0, n1 = 0;
        for (const auto& [r, d] : c.degree) {
            n0 += d == 0;
            n1 += d == 1;
            CHECK(c.degree.at(conjugate_root(r, ts[13])) == d);
        }
        a2 = a2 || (c.degree.size() == 6 && n1 == 2 && n0 == 0);
    }
    CHECK(a2);
    CHECK(enumerate_real_carriers(ts[15]).empty());
    CHECK(enumerate_real_carriers().size() == 58);
}
