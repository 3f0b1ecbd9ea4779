#include "atlas/sl2method.hpp"
#include "atlas/tables.hpp"
#include "doctest.h"

#include <set>

using namespace atlas;

namespace {

TensorElement tensor(const std::vector<std::pair<const char*, Q>>& terms)
{
    TensorElement e;
    for (const auto& [t, c] : terms)
        e[tuple_from_string(t)] += c;
    return e;
}

// gamma(3;1) = (2,0,2,0)
LieElement h31() { return characteristic_from_gamma({2, 0, 2, 0}); }

// the two one-parameter families through the gamma(3;1) characteristic, at a = 3/5
TensorElement family1(const Q& a, const Q& root)
{
    return tensor({{"+---", root / 2}, {"++-+", root / 2}, {"++--", a / 2}, {"+--+", -a / 2}});
}
TensorElement family2(const Q& b, const Q& root)
{
    return tensor({{"+---", root / 2}, {"++-+", -root / 2}, {"++--", b / 2}, {"+--+", b / 2}});
}

const TensorElement e1p = tensor({{"++--", Q(1, 2)}, {"+--+", Q(-1, 2)}});
const TensorElement e2p = tensor({{"++--", Q(1, 2)}, {"+--+", Q(1, 2)}});

}  // namespace

TEST_CASE("complex characteristics")
{
    auto cs = complex_characteristics();
    CHECK(cs.H.size() == 600);
    CHECK(cs.Hprime.size() == 62);
    REQUIRE(cs.homogeneous_flags.size() == cs.Hprime.size());
    CHECK(cs.homogeneous_count() == 30);

    std::set<std::pair<int, int>> found;
    for (size_t i = 0; i < cs.Hprime.size(); ++i) {
        if (!cs.homogeneous_flags[i])
            continue;
        LieElement h = torus_element(cs.Hprime[i]);
        int a = alpha_index(alpha_label(h));
        CHECK(alpha_label(h) == cs.alpha[i]);
        found.insert({a, gamma_index(a, gamma_label(h))});
    }
    std::set<std::pair<int, int>> expect;
    for (const auto& r : table1())
        expect.insert({r.alpha, r.gamma});
    CHECK(found == expect);
}

TEST_CASE("characteristic from labels")
{
    TorusPoint x = characteristic_from_alpha({0, 0, 2, 0});
    CHECK(alpha_label_torus(x) == Label{0, 0, 2, 0});
    CHECK(w0_dominant(w0_dominant(x)) == w0_dominant(x));
    LieElement h = h31();
    CHECK(torus_coords(h).has_value());
    CHECK(gamma_label(h) == Label{2, 0, 2, 0});
    CHECK(alpha_label(h) == Label{0, 0, 2, 0});
}

TEST_CASE("homogeneity test")
{
    const auto& r1 = table1()[0];
    Label g1 = gamma_beta_labels()[r1.alpha - 1][r1.gamma - 1];
    LieElement h = characteristic_from_gamma(g1);
    CHECK(homogeneity_test(h));
    CHECK_FALSE(homogeneity_test(zero8()));

    LieElement h2 = scale(h, 2);
    bool listed = complex_class_of(alpha_label(h2), gamma_label(h2)) != 0;
    CHECK(homogeneity_test(h2) == listed);

    HomogeneityOptions few;
    few.trials = 0;
    CHECK_THROWS_AS(homogeneity_test(h, few), std::logic_error);
    few.crosscheck = false;
    CHECK_FALSE(homogeneity_test(h, few));

    CHECK_THROWS_AS(homogeneity_test(factor_triples()[0].E), std::invalid_argument);
}

TEST_CASE("weight spaces")
{
    auto u = weight2_space(h31());
    REQUIRE(u.size() == 4);
    std::set<TensorElement> tuples;
    for (const char* t : {"++-+", "++--", "+--+", "+---"})
        tuples.insert(TensorElement::basis(tuple_from_string(t)));
    CHECK(std::set<TensorElement>(u.begin(), u.end()) == tuples);

    CHECK(weight2_space(zero8()).empty());
    CHECK(weight_space(zero8(), 0).size() == 16);

    for (const auto& x : complex_characteristics().Hprime) {
        LieElement h = torus_element(x);
        size_t total = 0;
        for (int k = -12; k <= 12; ++k)
            total += weight_space(h, k).size();
        CHECK(total == 16);
    }
}

TEST_CASE("Cayley equations")
{
    LieElement h = h31();
    PolyIdeal ideal = cayley_equations(h);
    CHECK(ideal.names.size() == 4);
    CHECK(ideal.generators.size() == 6);

    auto c = weight2_coords(h, e1p);
    REQUIRE(c.has_value());
    for (const auto& g : ideal.generators)
        CHECK(sgn(g.eval(*c)) == 0);
    CHECK(satisfies_cayley(h, e1p));
    CHECK(satisfies_cayley(h, e2p));

    auto z = weight2_coords(h, TensorElement());
    REQUIRE(z.has_value());
    bool vanish = true;
    for (const auto& g : ideal.generators)
        vanish = vanish && sgn(g.eval(*z)) == 0;
    CHECK_FALSE(vanish);

    for (const auto& e : {family1(Q(3, 5), Q(4, 5)), family2(Q(3, 5), Q(4, 5)), family1(Q(0), Q(1)), family2(Q(-4, 5), Q(3, 5))}) {
        auto p = weight2_coords(h, e);
        REQUIRE(p.has_value());
        for (const auto& g : ideal.generators)
            CHECK(sgn(g.eval(*p)) == 0);
    }
    CHECK_FALSE(weight2_coords(h, TensorElement::basis(0)).has_value());
}

TEST_CASE("centralizer reduction")
{
    LieElement h = h31();
    std::vector<TensorElement> in = {family1(Q(3, 5), Q(4, 5)), family2(Q(3, 5), Q(4, 5)), e1p};
    auto out = centralizer_reduce(h, in);
    REQUIRE(out.size() == 3);
    CHECK(out[0].element == e1p);
    CHECK(out[1].element == e2p);
    CHECK(out[2].element == e1p);
    CHECK(out[2].moves.empty());
    for (size_t i = 0; i < out.size(); ++i) {
        CHECK_FALSE(out[i].unreduced);
        CHECK(out[i].g.unimodular());
        CHECK(act(out[i].g, in[i]) == out[i].element);
        CHECK(satisfies_cayley(h, out[i].element));
    }
    CHECK(fingerprint(e1p).beta != fingerprint(e2p).beta);

    auto odd = centralizer_reduce(h, {tensor({{"++-+", 1}, {"+--+", 1}})});
    CHECK(odd[0].unreduced);
}

TEST_CASE("Cayley solutions for gamma(3;1)")
{
    auto s = solve_cayley(h31());
    REQUIRE(s.complete);
    CHECK(s.unknown_pairs == 0);
    REQUIRE(s.classes.size() == 2);
    std::set<TensorElement> reps{s.classes[0].rep, s.classes[1].rep};
    CHECK(reps == std::set<TensorElement>{e1p, e2p});
    for (const auto& r : s.reduced)
        CHECK(satisfies_cayley(h31(), r.element));

    GroebnerBudget none;
    none.max_pairs = 0;
    CHECK_FALSE(solve_cayley(h31(), 8, none).complete);
}

TEST_CASE("real orbits at a characteristic")
{
    auto r = real_orbits_at(*torus_coords(h31()));
    CHECK(r.gamma == Label{2, 0, 2, 0});
    CHECK(r.points == 40);
    CHECK(r.open_points == 24);
    CHECK(r.unknown_pairs == 0);
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0].beta != r.classes[1].beta);

    // delta pairs: equal keys, different orbits
    const auto& row = table1()[16];
    Label g = gamma_beta_labels()[row.alpha - 1][row.gamma - 1];
    auto d = real_orbits_at(*torus_coords(characteristic_from_gamma(g)));
    REQUIRE(d.classes.size() == 4);
    auto recs = collect_classes({d});
    std::set<int> deltas;
    for (const auto& c : recs) {
        CHECK(c.complex_class == row.row);
        REQUIRE(c.delta.has_value());
        deltas.insert(*c.delta);
    }
    CHECK(deltas == std::set<int>{1, 2});

    RealRouteOptions small;
    small.support_bound = 1;
    CHECK(real_orbits_at(*torus_coords(h31()), small).classes.empty());
}
