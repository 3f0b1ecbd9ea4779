#include "atlas/classify.hpp"
#include "doctest.h"

#include <map>
#include <random>
#include <set>

using namespace atlas;

static TensorElement E(const char* s) { return parse_sign_expr(s); }

TEST_CASE("invariant tensors")
{
    const auto& it = invariant_tensors();
    CHECK(it.eta == QMatrix::from_rows({{2, 0, 0}, {0, -2, 0}, {0, 0, 2}}));
    CHECK(it.eta * it.eta_inv == QMatrix::identity(3));
    QMatrix g = mat2(2, 3, 1, 2);
    CHECK(g * it.epsilon * g.transpose() == it.epsilon);
}

TEST_CASE("quadratic classifier basics")
{
    CHECK(quadratic_classifier(TensorElement(), 0, 1).is_zero());
    CHECK(symmetric_signature(quadratic_classifier(TensorElement(), 0, 1)) == Signature{0, 0});
    CHECK_THROWS_AS(quadratic_classifier(E("(++--)"), 2, 2), std::invalid_argument);
    auto v = E("(++++) - (++--) + (+-+-) + (+--+)");
    for (auto [i, j] : kPairs)
        CHECK(quadratic_classifier(v, i, j).is_symmetric());
}

TEST_CASE("quadratic classifiers are covariant and singlet outside the pair")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rnd_sl2 = [&] {
        for (;;) {
            Q a = d(rng), c = d(rng), dd = d(rng);
            if (sgn(c) != 0)
                return mat2(a, (a * dd - 1) / c, c, dd);
        }
    };
    auto v = E("(+++-) + (++-+) - (-+--) + (+---)");
    auto base = quadratic_fingerprint(v);
    for (int trial = 0; trial < 20; ++trial) {
        GroupElement4 g;
        for (auto& m : g.g)
            m = rnd_sl2();
        CHECK(quadratic_fingerprint(act(g, v)) == base);
        GroupElement4 h = GroupElement4::identity();
        h.g[2] = g.g[2];
        h.g[3] = g.g[3];
        CHECK(quadratic_classifier(act(h, v), 0, 1) == quadratic_classifier(v, 0, 1));
    }
}

TEST_CASE("quartic classifiers are symmetric and odd projections vanish")
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        TensorElement v;
        for (int t = 0; t < 16; ++t)
            v[t] = d(rng);
        auto q = quartic_classifiers(v);
        REQUIRE(q.size() == 16);
        for (const auto& m : q)
            CHECK(m.is_symmetric());
        if (trial < 3)
            for (const auto& m : quartic_odd_projections(v))
                CHECK(m.is_zero());
    }
    for (const auto& m : quartic_classifiers(TensorElement()))
        CHECK(m.is_zero());
}

TEST_CASE("fingerprint of row 1")
{
    auto r = fingerprint(E("(++--)"));
    CHECK(r.alpha == Label{0, 1, 0, 0});
    CHECK(r.gamma == Label{1, 1, 1, 1});
    CHECK(r.beta == Label{1, 1, 1, 1});
    CHECK(r.dim == 5);
    CHECK(r.complex_class == 1);
    CHECK_THROWS_AS(fingerprint(TensorElement()), std::invalid_argument);
    CHECK_THROWS_AS(fingerprint(E("(++++) + (----)")), std::invalid_argument);
}

TEST_CASE("delta assignment and merging")
{
    CHECK(merge_to_gprime({}).count == 0);
    auto recs = fingerprint_all_serial(expand_row(table1()[16]));  // row 17
    auto d = assign_delta(recs);
    for (const auto& r : d)
        CHECK(r.delta.has_value());
    auto m = merge_to_gprime(d);
    CHECK(m.count == 2);
    auto single = assign_delta({fingerprint(E("(++--)"))});
    CHECK_FALSE(single[0].delta.has_value());
    CHECK(merge_to_gprime(single).count == 1);
}

TEST_CASE("serial and parallel fingerprinting agree")
{
    std::vector<TensorElement> reps;
    for (int row : {8, 16, 23})
        for (const auto& v : expand_row(table1()[row - 1]))
            reps.push_back(v);
    CHECK(to_json(fingerprint_all_serial(reps)) == to_json(fingerprint_all_parallel(reps)));
}

TEST_CASE("table repair")
{
    RepairTarget t1{5, {0, 1, 0, 0}, {1, 1, 1, 1}, {{1, 1, 1, 1}}, {"++--"}};
    CHECK(repair_table_row(t1).support == std::vector<std::string>{"++--"});
    RepairTarget t2{0, {2, 0, 0, 0}, {2, 2, 0, 0}, {{2, 2, 0, 0}}, {}};
    auto r2 = repair_table_row(t2, 2);
    CHECK(r2.element.support_size() == 2);
    RepairTarget bad{0, {2, 0, 0, 0}, {9, 9, 9, 9}, {}, {}};
    CHECK_THROWS_AS(repair_table_row(bad, 1), std::runtime_error);
}

namespace {
std::vector<OrbitRecord> all_table_records()
{
    std::vector<TensorElement> reps;
    for (const auto& row : table1())
        for (const auto& v : expand_row(row))
            reps.push_back(v);
    return fingerprint_all_parallel(reps);
}
}  // namespace

TEST_CASE("table expansions reproduce the labels and class counts")
{
    auto recs = all_table_records();
    REQUIRE(recs.size() == 157);
    std::set<std::tuple<Label, Label, Label, Fingerprint>> keys;
    size_t i = 0;
    for (const auto& row : table1()) {
        std::set<int> betas;
        for (size_t j = 0; j < expand_row(row).size(); ++j, ++i) {
            const auto& r = recs[i];
            CHECK(r.complex_class == row.row);
            CHECK(r.dim == row.dim);
            CHECK(r.alpha_k == row.alpha);
            CHECK(r.gamma_k == row.gamma);
            betas.insert(r.beta_k);
            keys.insert(r.key());
        }
        CHECK(betas == std::set<int>(row.betas.begin(), row.betas.end()));
    }
    CHECK(keys.size() == 101);
}

TEST_CASE("beta(6;k) signatures on gamma(6;1)")
{
    const Signature P{2, 0}, N{0, 2}, M{1, 1};
    std::map<int, std::array<Signature, 3>> want = {
        {1, {N, N, N}}, {2, {N, P, P}}, {3, {P, P, N}}, {4, {P, N, P}}, {5, {M, M, M}}};
    std::set<int> seen;
    for (const auto& v : expand_row(table1()[13])) {
        auto r = fingerprint(v);
        REQUIRE(want.count(r.beta_k));
        seen.insert(r.beta_k);
        std::array<Signature, 3> got{r.signatures[0], r.signatures[1], r.signatures[2]};
        CHECK(got == want[r.beta_k]);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("delta signatures on gamma(6;5), beta(6;5)")
{
    const Signature P{1, 0}, N{0, 1};
    std::set<std::pair<Signature, Signature>> got;
    auto recs = assign_delta(fingerprint_all_serial(expand_row(table1()[15])));
    for (const auto& r : recs)
        if (r.beta_k == 5) {
            REQUIRE(r.delta.has_value());
            got.insert({r.signatures[5], r.signatures[4]});
        }
    CHECK(got == std::set<std::pair<Signature, Signature>>{{N, N}, {N, P}, {P, N}, {P, P}});
}
