#include "atlas/classify.hpp"
#include "atlas/groebner.hpp"
#include "atlas/tables.hpp"
#include "doctest.h"

using namespace atlas;

static TensorElement E(const char* s) { return parse_sign_expr(s); }

TEST_CASE("buchberger on small ideals")
{
    auto x = MultiPoly::var(1, 0), one = MultiPoly::constant(1, 1);
    PolyIdeal a{{"x"}, {x * x - one, x - one}, std::nullopt};
    REQUIRE(buchberger(a));
    CHECK(*a.basis == std::vector<MultiPoly>{x - one});

    PolyIdeal unit{{"x"}, {one}, std::nullopt};
    REQUIRE(buchberger(unit));
    CHECK(is_unit_ideal(*unit.basis));

    auto X = MultiPoly::var(2, 0), Y = MultiPoly::var(2, 1), c1 = MultiPoly::constant(2, 1);
    PolyIdeal b{{"x11", "x22"}, {X * X + Y * Y, X * Y - c1}, std::nullopt};
    REQUIRE(buchberger(b));
    CHECK(is_groebner_basis(*b.basis));
    CHECK_FALSE(is_unit_ideal(*b.basis));
    auto w = real_infeasibility_witness(*b.basis);
    REQUIRE(w.has_value());
    CHECK(w->to_string(b.names) == "x22^4 + 1");

    PolyIdeal empty{{"x"}, {}, std::nullopt};
    REQUIRE(buchberger(empty));
    CHECK(empty.basis->empty());
}

TEST_CASE("buchberger output passes the S-polynomial check")
{
    auto x = MultiPoly::var(3, 0), y = MultiPoly::var(3, 1), z = MultiPoly::var(3, 2), c = MultiPoly::constant(3, 1);
    PolyIdeal i{{"x", "y", "z"}, {x * y - z, y * z - x * c * 2, x * x + y - c}, std::nullopt};
    REQUIRE(buchberger(i));
    CHECK(is_groebner_basis(*i.basis));
    for (const auto& g : i.generators)
        CHECK(reduce(g, *i.basis).is_zero());
}

TEST_CASE("buchberger respects the budget")
{
    auto x = MultiPoly::var(2, 0), y = MultiPoly::var(2, 1), c = MultiPoly::constant(2, 1);
    PolyIdeal i{{"x", "y"}, {x * x * y - c, x * y * y - x}, std::nullopt};
    GroebnerBudget none;
    none.max_pairs = 0;
    CHECK_FALSE(buchberger(i, none));
    CHECK_FALSE(i.basis.has_value());
}

TEST_CASE("conjugacy ideal")
{
    auto e = E("(++--) - (---+)"), e2 = E("(++--) + (---+)");
    PolyIdeal same = conjugacy_ideal(e, e);
    CHECK(same.names.size() == 16);
    std::vector<Q> id(16);
    for (int k = 0; k < 4; ++k)
        id[4 * k] = id[4 * k + 3] = 1;
    for (const auto& p : same.generators)
        CHECK(sgn(p.eval(id)) == 0);

    // J x J x I x J
    std::vector<Q> j = {0, 1, -1, 0, 0, 1, -1, 0, 1, 0, 0, 1, 0, 1, -1, 0};
    PolyIdeal pair = conjugacy_ideal(e, e2);
    for (const auto& p : pair.generators)
        CHECK(sgn(p.eval(j)) == 0);
}

TEST_CASE("decide conjugacy: trivial and sign-matrix cases")
{
    auto e = E("(++--) - (---+)"), e2 = E("(++--) + (---+)");
    auto v = decide_conjugacy(e, e);
    CHECK(v.kind == ConjugacyVerdict::Kind::Conjugate);
    CHECK(*v.witness == GroupElement4::identity());

    auto w = decide_conjugacy(e, e2);
    REQUIRE(w.kind == ConjugacyVerdict::Kind::Conjugate);
    CHECK(verify_witness(*w.witness, e, e2));
    auto back = decide_conjugacy(e2, e);
    REQUIRE(back.kind == ConjugacyVerdict::Kind::Conjugate);
    CHECK(verify_witness(*back.witness, e2, e));

    CHECK(decide_conjugacy(e, TensorElement()).kind == ConjugacyVerdict::Kind::NotConjugate);
    auto diff = decide_conjugacy(E("(++--)"), e);
    CHECK(diff.kind == ConjugacyVerdict::Kind::NotConjugate);
    CHECK(diff.certificate.find("differs") != std::string::npos);
}

TEST_CASE("decide conjugacy: rational point from the Groebner basis")
{
    auto e = E("(+++-) + (++-+) + (-+--) + (+---)");
    GroupElement4 g = GroupElement4::identity();
    g.g[0] = mat2(2, 0, 0, Q(1, 2));
    g.g[2] = mat2(Q(1, 3), 0, 0, 3);
    auto e2 = act(g, e);
    DecideOptions opt;
    opt.witness_search = false;
    auto v = decide_conjugacy(e, e2, opt);
    REQUIRE(v.kind == ConjugacyVerdict::Kind::Conjugate);
    CHECK(verify_witness(*v.witness, e, e2));
    CHECK(v.reason.find("Groebner") != std::string::npos);
}

TEST_CASE("decide conjugacy: delta pairs are separated")
{
    auto reps = expand_row(table1()[16]);  // row 17: two delta pairs
    std::vector<std::pair<TensorElement, TensorElement>> pairs;
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (fingerprint(reps[i]).key() == fingerprint(reps[j]).key())
                pairs.push_back({reps[i], reps[j]});
    REQUIRE(pairs.size() == 2);
    for (const auto& [a, b] : pairs) {
        auto v = decide_conjugacy(a, b);
        CHECK(v.kind == ConjugacyVerdict::Kind::NotConjugate);
        CHECK(v.certificate.find("no real zero") != std::string::npos);
        CHECK(decide_conjugacy(b, a).kind == ConjugacyVerdict::Kind::NotConjugate);
    }

    DecideOptions none;
    none.budget.max_pairs = 0;
    auto u = decide_conjugacy(pairs[0].first, pairs[0].second, none);
    CHECK(u.kind == ConjugacyVerdict::Kind::Unknown);
    CHECK(u.reason == "Groebner budget exhausted");
}

TEST_CASE("positive-determinant witness for a rotation-related pair")
{
    auto e = parse_sign_expr("(+---) + (-+-+)");
    auto e2 = parse_sign_expr("(++--) + (+--+) + (-+-+) + (----)");
    auto v = decide_conjugacy(e, e2);
    REQUIRE(v.kind == ConjugacyVerdict::Kind::Conjugate);
    CHECK(v.scaled);
    CHECK(verify_verdict(v, e, e2));
    CHECK_FALSE(verify_witness(*v.witness, e, e2));
    CHECK_FALSE(verify_verdict(v, e2, e));

    GroupElement4 g = GroupElement4::identity();
    g.g[0] = mat2(1, 0, 0, -1);
    CHECK_FALSE(verify_scaled_witness(g, e, act(g, e)));
    g.g[1] = mat2(2, 0, 0, 1);
    g.g[0] = mat2(1, 0, 0, 1);
    CHECK(verify_scaled_witness(g, e, act(g, e)));
}

TEST_CASE("class splitting by key and conjugacy")
{
    std::vector<OrbitRecord> recs;
    for (const char* s : {"(++--) + (---+)", "(++--) - (---+)", "(++--)", "(+---) + (-+-+)", "(++--) + (+--+) + (-+-+) + (----)"})
        recs.push_back(fingerprint(parse_sign_expr(s)));
    // the sl3 pair and both rotation-related elements form one class
    auto split = split_classes(recs);
    CHECK(split.unknown_pairs == 0);
    REQUIRE(split.classes.size() == 2);
    CHECK(split.classes[0].rep == recs[0].rep);
    CHECK(split.classes[1].rep == recs[2].rep);

    CHECK(unmatched_classes(split.classes, recs).empty());
    std::vector<OrbitRecord> other{recs[4], recs[2]};
    CHECK(unmatched_classes(split.classes, other).empty());
    auto missing = unmatched_classes(split.classes, {recs[2]});
    REQUIRE(missing.size() == 1);
    CHECK(missing[0].rep == recs[0].rep);
}

TEST_CASE("row 17 equal-key pairs stay apart when split")
{
    auto recs = fingerprint_all_serial(expand_row(table1()[16]));
    auto split = split_classes(recs);
    CHECK(split.classes.size() == 4);
    CHECK(split.unknown_pairs == 0);
}
