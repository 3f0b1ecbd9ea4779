#include "atlas/groebner.hpp"

#include "atlas/classify.hpp"
#include "atlas/liealg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace atlas {

namespace {

bool divides(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        m[i] = std::max(a[i], b[i]);
    return m;
}

Monomial quotient(const Monomial& a, const Monomial& b)
{
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        m[i] = a[i] - b[i];
    return m;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

MultiPoly substitute(const MultiPoly& p, int var, const Q& value)
{
    MultiPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        Q f = c;
        for (int e = 0; e < m[var]; ++e)
            f *= value;
        m2[var] = 0;
        r.add_term(m2, f);
    }
    return r;
}

std::vector<MultiPoly> interreduce(std::vector<MultiPoly> g)
{
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < g.size() && !drop; ++j) {
            if (i == j || !divides(g[j].lead_monomial(), g[i].lead_monomial()))
                continue;
            // equal leading monomials: keep the first
            drop = g[j].lead_monomial() != g[i].lead_monomial() || j < i;
        }
        if (!drop)
            minimal.push_back(g[i]);
    }
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        out.push_back(reduce(minimal[i], others).monic());
    }
    std::sort(out.begin(), out.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return LexGreater()(a.lead_monomial(), b.lead_monomial()); });
    return out;
}

std::optional<std::vector<Q>> univariate(const MultiPoly& p, int var)
{
    std::vector<Q> c;
    for (const auto& [m, q] : p.terms()) {
        for (int i = 0; i < p.nvars(); ++i)
            if (i != var && m[i] != 0)
                return std::nullopt;
        if (static_cast<int>(c.size()) <= m[var])
            c.resize(m[var] + 1);
        c[m[var]] += q;
    }
    return c;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> d;
    if (n > mpz_class("1000000000000"))
        return d;
    for (mpz_class i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n)
                d.push_back(n / i);
        }
    return d;
}

std::vector<Q> rational_roots(std::vector<Q> c)
{
    std::vector<Q> roots;
    while (!c.empty() && sgn(c.back()) == 0)
        c.pop_back();
    if (c.size() < 2)
        return roots;
    size_t low = 0;
    while (sgn(c[low]) == 0)
        ++low;
    if (low > 0) {
        roots.push_back(0);
        c.erase(c.begin(), c.begin() + low);
    }
    if (c.size() < 2)
        return roots;
    mpz_class den = 1;
    for (const auto& q : c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& q : c)
        z.push_back(mpz_class(q * den));
    for (const auto& p : divisors(z.front()))
        for (const auto& q : divisors(z.back()))
            for (int s : {1, -1}) {
                Q x(p * s, q);
                x.canonicalize();
                Q v = 0;
                for (size_t i = c.size(); i-- > 0;)
                    v = v * x + c[i];
                if (sgn(v) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

using PolyMatrix = std::array<MultiPoly, 4>;  // (0,0),(0,1),(1,0),(1,1)

std::array<MultiPoly, 16> symbolic_act(const std::array<PolyMatrix, 4>& g, const TensorElement& v, int nvars)
{
    std::array<MultiPoly, 16> cur;
    for (int t = 0; t < 16; ++t)
        cur[t] = MultiPoly::constant(nvars, v[t]);
    for (int k = 0; k < 4; ++k) {
        std::array<MultiPoly, 16> next;
        for (auto& p : next)
            p = MultiPoly(nvars);
        int shift = 3 - k;
        for (int t = 0; t < 16; ++t) {
            if (cur[t].is_zero())
                continue;
            int old = (t >> shift) & 1;
            for (int nw = 0; nw < 2; ++nw) {
                int t2 = (t & ~(1 << shift)) | (nw << shift);
                next[t2] = next[t2] + g[k][nw * 2 + old] * cur[t];
            }
        }
        cur = next;
    }
    return cur;
}

std::string names_list(const std::vector<std::string>& names)
{
    std::string s;
    for (const auto& n : names)
        s += (s.empty() ? "" : ",") + n;
    return s;
}

}  // namespace

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& g)
{
    MultiPoly p = f, r(f.nvars());
    while (!p.is_zero()) {
        const Monomial lm = p.lead_monomial();
        const Q lc = p.lead_coeff();
        bool hit = false;
        for (const auto& gi : g) {
            if (gi.is_zero() || !divides(gi.lead_monomial(), lm))
                continue;
            p = p - gi.mul_term(quotient(lm, gi.lead_monomial()), lc / gi.lead_coeff());
            hit = true;
            break;
        }
        if (!hit) {
            r.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    return r;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g)
{
    Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
    return f.mul_term(quotient(l, f.lead_monomial()), 1 / f.lead_coeff()) -
           g.mul_term(quotient(l, g.lead_monomial()), 1 / g.lead_coeff());
}

bool is_unit_ideal(const std::vector<MultiPoly>& basis)
{
    return std::any_of(basis.begin(), basis.end(), [](const MultiPoly& p) { return !p.is_zero() && p.is_constant(); });
}

bool buchberger(PolyIdeal& ideal, const GroebnerBudget& budget)
{
    ideal.basis.reset();
    int n = static_cast<int>(ideal.names.size());
    std::vector<MultiPoly> g;
    for (const auto& p : ideal.generators) {
        if (p.nvars() != n)
            throw std::invalid_argument("buchberger: generator has the wrong number of variables");
        if (!p.is_zero())
            g.push_back(p.monic());
    }
    if (g.empty()) {
        ideal.basis = std::vector<MultiPoly>{};
        return true;
    }
    if (is_unit_ideal(g)) {
        ideal.basis = std::vector<MultiPoly>{MultiPoly::constant(n, 1)};
        return true;
    }
    std::set<std::pair<size_t, size_t>> pending, done;
    for (size_t j = 0; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            pending.insert({i, j});
    long processed = 0;
    while (!pending.empty()) {
        // normal selection: smallest lcm, ties by index
        auto best = pending.begin();
        Monomial best_l = lcm(g[best->first].lead_monomial(), g[best->second].lead_monomial());
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = lcm(g[it->first].lead_monomial(), g[it->second].lead_monomial());
            if (LexGreater()(best_l, l)) {
                best = it;
                best_l = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        done.insert({i, j});
        if (coprime(g[i].lead_monomial(), g[j].lead_monomial()))
            continue;
        bool chain = false;
        for (size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j || !divides(g[k].lead_monomial(), best_l))
                continue;
            auto key = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            chain = done.count(key(i, k)) && done.count(key(j, k));
        }
        if (chain)
            continue;
        if (++processed > budget.max_pairs)
            return false;
        MultiPoly r = reduce(s_polynomial(g[i], g[j]), g);
        if (r.is_zero())
            continue;
        if (r.is_constant()) {
            ideal.basis = std::vector<MultiPoly>{MultiPoly::constant(n, 1)};
            return true;
        }
        if (r.total_degree() > budget.max_degree || g.size() >= budget.max_basis)
            return false;
        g.push_back(r.monic());
        for (size_t k = 0; k + 1 < g.size(); ++k)
            pending.insert({k, g.size() - 1});
    }
    ideal.basis = interreduce(g);
    return true;
}

bool is_groebner_basis(const std::vector<MultiPoly>& g)
{
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (!reduce(s_polynomial(g[i], g[j]), g).is_zero())
                return false;
    return true;
}

PolyIdeal conjugacy_ideal(const TensorElement& e, const TensorElement& e2)
{
    PolyIdeal ideal;
    for (int k = 1; k <= 4; ++k)
        for (char c : std::string("abcd"))
            ideal.names.push_back(std::string(1, c) + std::to_string(k));
    const int n = 16;
    std::array<PolyMatrix, 4> g;
    for (int k = 0; k < 4; ++k) {
        for (int q = 0; q < 4; ++q)
            g[k][q] = MultiPoly::var(n, 4 * k + q);
        ideal.generators.push_back(g[k][0] * g[k][3] - g[k][1] * g[k][2] - MultiPoly::constant(n, 1));
    }
    auto img = symbolic_act(g, e, n);
    for (int t = 0; t < 16; ++t) {
        MultiPoly p = img[t] - MultiPoly::constant(n, e2[t]);
        if (!p.is_zero())
            ideal.generators.push_back(p);
    }
    return ideal;
}

std::optional<MultiPoly> real_infeasibility_witness(const std::vector<MultiPoly>& basis)
{
    for (const auto& p : basis) {
        bool even = true, has_const = false;
        int sign = 0;
        for (const auto& [m, c] : p.terms()) {
            for (int e : m)
                even = even && e % 2 == 0;
            int s = sgn(c) > 0 ? 1 : -1;
            if (sign == 0)
                sign = s;
            even = even && s == sign;
            has_const = has_const || std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        }
        if (even && has_const)
            return p;
    }
    return std::nullopt;
}

std::vector<std::vector<Q>> rational_points(const std::vector<MultiPoly>& basis, int nvars, size_t limit, std::uint64_t seed)
{
    std::vector<std::vector<Q>> out;
    if (limit == 0 || is_unit_ideal(basis))
        return out;
    static const std::vector<Q> free_values = {Q(1), Q(0), Q(-1), Q(2), Q(1, 2)};
    std::mt19937_64 rng(seed);
    std::vector<Q> x(nvars);
    long nodes = 0;
    // returns true to stop the search
    std::function<bool(int, const std::vector<MultiPoly>&)> dfs = [&](int var, const std::vector<MultiPoly>& polys) {
        if (var < 0) {
            bool ok = true;
            for (const auto& p : basis)
                if (sgn(p.eval(x)) != 0)
                    ok = false;
            if (ok && std::find(out.begin(), out.end(), x) == out.end())
                out.push_back(x);
            return out.size() >= limit;
        }
        if (++nodes > 20000)
            return true;
        std::vector<Q> cands;
        bool constrained = false;
        for (const auto& p : polys) {
            if (p.is_zero())
                continue;
            auto u = univariate(p, var);
            if (!u)
                continue;
            if (p.is_constant())
                return false;
            cands = rational_roots(*u);
            constrained = true;
            break;
        }
        if (!constrained)
            cands = free_values;
        if (seed != 0)
            std::shuffle(cands.begin(), cands.end(), rng);
        for (const auto& v : cands) {
            std::vector<MultiPoly> next;
            bool ok = true;
            for (const auto& p : polys) {
                MultiPoly s = substitute(p, var, v);
                if (!s.is_zero() && s.is_constant()) {
                    ok = false;
                    break;
                }
                next.push_back(s);
            }
            if (!ok)
                continue;
            x[var] = v;
            if (dfs(var - 1, next))
                return true;
        }
        return false;
    };
    dfs(nvars - 1, basis);
    return out;
}

std::optional<std::vector<Q>> rational_point(const std::vector<MultiPoly>& basis, int nvars)
{
    auto pts = rational_points(basis, nvars, 1);
    if (pts.empty())
        return std::nullopt;
    return pts.front();
}

std::string to_string(ConjugacyVerdict::Kind k)
{
    switch (k) {
    case ConjugacyVerdict::Kind::Conjugate:
        return "Conjugate";
    case ConjugacyVerdict::Kind::NotConjugate:
        return "NotConjugate";
    default:
        return "Unknown";
    }
}

bool verify_witness(const GroupElement4& g, const TensorElement& e, const TensorElement& e2)
{
    return g.unimodular() && act(g, e) == e2;
}

namespace {

ConjugacyVerdict conjugate(const GroupElement4& g, std::string route)
{
    ConjugacyVerdict v;
    v.kind = ConjugacyVerdict::Kind::Conjugate;
    v.witness = g;
    v.reason = std::move(route);
    return v;
}

ConjugacyVerdict not_conjugate(std::string cert)
{
    ConjugacyVerdict v;
    v.kind = ConjugacyVerdict::Kind::NotConjugate;
    v.certificate = std::move(cert);
    return v;
}

std::optional<std::string> invariant_difference(const TensorElement& e, const TensorElement& e2)
{
    OrbitRecord a, b;
    try {
        a = fingerprint(e);
        b = fingerprint(e2);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    auto diff = [](const char* what, const std::string& x, const std::string& y) {
        return std::string(what) + " differs: " + x + " vs " + y;
    };
    if (a.dim != b.dim)
        return diff("orbit dimension", std::to_string(a.dim), std::to_string(b.dim));
    if (a.alpha != b.alpha)
        return diff("alpha", label_string(a.alpha), label_string(b.alpha));
    if (a.gamma != b.gamma)
        return diff("gamma", label_string(a.gamma), label_string(b.gamma));
    if (a.beta != b.beta)
        return diff("beta", label_string(a.beta), label_string(b.beta));
    for (size_t p = 0; p < kPairs.size(); ++p)
        if (a.signatures[p] != b.signatures[p])
            return diff(("sign T(" + std::to_string(kPairs[p].first + 1) + "," + std::to_string(kPairs[p].second + 1) + ")").c_str(),
                        to_string(a.signatures[p]), to_string(b.signatures[p]));
    return std::nullopt;
}

std::optional<GroupElement4> sign_matrix_witness(const TensorElement& e, const TensorElement& e2)
{
    const std::array<QMatrix, 4> mats = {mat2(1, 0, 0, 1), mat2(-1, 0, 0, -1), mat2(0, 1, -1, 0), mat2(0, -1, 1, 0)};
    for (int code = 0; code < 256; ++code) {
        GroupElement4 g;
        for (int k = 0; k < 4; ++k)
            g.g[k] = mats[(code >> (2 * (3 - k))) & 3];
        if (act(g, e) == e2)
            return g;
    }
    return std::nullopt;
}

// Characteristic h in g0 shared by homogeneous triples through e and e2.
std::optional<QMatrix> shared_characteristic(const TensorElement& e, const TensorElement& e2)
{
    QMatrix x = sigma(e), x2 = sigma(e2);
    std::vector<QMatrix> cands;
    for (const QMatrix* y : {&x, &x2}) {
        try {
            cands.push_back(complete_to_sl2(*y).h);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    // diagonal candidate: tuple weights equal to 2 on both supports
    const auto& ft = factor_triples();
    std::array<QMatrix, 4> hk;
    for (int k = 0; k < 4; ++k) {
        QMatrix h = ft[k].H;
        if (sgn(g0_factor_matrices(h)[k](0, 0)) < 0)
            h = scale(h, -1);
        hk[k] = h;
    }
    std::vector<std::vector<Q>> rows;
    std::vector<Q> rhs;
    for (int t = 0; t < 16; ++t)
        if (sgn(e[t]) != 0 || sgn(e2[t]) != 0) {
            std::vector<Q> r(4);
            for (int k = 0; k < 4; ++k)
                r[k] = tuple_sign(t, k);
            rows.push_back(r);
            rhs.push_back(2);
        }
    QMatrix a(static_cast<int>(rows.size()), 4);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int k = 0; k < 4; ++k)
            a(static_cast<int>(i), k) = rows[i][k];
    if (auto s = solve(a, rhs)) {
        QMatrix h = zero8();
        for (int k = 0; k < 4; ++k)
            h = h + scale(hk[k], (*s)[k]);
        cands.push_back(h);
    }
    for (const auto& h : cands)
        if (complete_with_h(h, x) && complete_with_h(h, x2))
            return h;
    return std::nullopt;
}

struct ReducedIdeal {
    PolyIdeal ideal;
    std::array<PolyMatrix, 4> g;
};

// With unimodular off the determinant equations are dropped (factors in GL2).
ReducedIdeal centralizer_ideal(const QMatrix& h, const TensorElement& e, const TensorElement& e2, bool unimodular = true)
{
    auto a = g0_factor_matrices(h);
    ReducedIdeal r;
    std::vector<int> kinds(4);
    for (int k = 0; k < 4; ++k) {
        std::string s = std::to_string(k + 1);
        if (a[k].is_zero()) {
            kinds[k] = 0;
            for (const char* c : {"a", "b", "c", "d"})
                r.ideal.names.push_back(c + s);
        } else if (sgn(a[k](0, 1)) == 0 && sgn(a[k](1, 0)) == 0) {
            kinds[k] = 1;
            r.ideal.names.push_back("u" + s);
            r.ideal.names.push_back("w" + s);
        } else {
            kinds[k] = 2;
            r.ideal.names.push_back("s" + s);
            r.ideal.names.push_back("t" + s);
        }
    }
    int n = static_cast<int>(r.ideal.names.size());
    auto c = [&](const Q& q) { return MultiPoly::constant(n, q); };
    int idx = 0;
    for (int k = 0; k < 4; ++k) {
        auto& g = r.g[k];
        if (kinds[k] == 0) {
            for (int q = 0; q < 4; ++q)
                g[q] = MultiPoly::var(n, idx + q);
            if (unimodular)
                r.ideal.generators.push_back(g[0] * g[3] - g[1] * g[2] - c(1));
            idx += 4;
        } else if (kinds[k] == 1) {
            MultiPoly u = MultiPoly::var(n, idx), w = MultiPoly::var(n, idx + 1);
            g = {u, MultiPoly(n), MultiPoly(n), w};
            if (unimodular)
                r.ideal.generators.push_back(u * w - c(1));
            idx += 2;
        } else {
            MultiPoly sv = MultiPoly::var(n, idx), tv = MultiPoly::var(n, idx + 1);
            for (int q = 0; q < 4; ++q)
                g[q] = tv * a[k](q / 2, q % 2) + (q == 0 || q == 3 ? sv : MultiPoly(n));
            if (unimodular)
                r.ideal.generators.push_back(sv * sv + tv * tv * determinant(a[k]) - c(1));
            idx += 2;
        }
    }
    auto img = symbolic_act(r.g, e, n);
    for (int t = 0; t < 16; ++t) {
        MultiPoly p = img[t] - c(e2[t]);
        if (!p.is_zero())
            r.ideal.generators.push_back(p);
    }
    return r;
}

GroupElement4 evaluate(const std::array<PolyMatrix, 4>& g, const std::vector<Q>& x)
{
    GroupElement4 out;
    for (int k = 0; k < 4; ++k)
        out.g[k] = mat2(g[k][0].eval(x), g[k][1].eval(x), g[k][2].eval(x), g[k][3].eval(x));
    return out;
}

// Decide from a solved ideal; nullopt when inconclusive.
std::optional<ConjugacyVerdict> analyse(PolyIdeal& ideal, const std::array<PolyMatrix, 4>& g, const TensorElement& e,
                                        const TensorElement& e2, const GroebnerBudget& budget, const std::string& route)
{
    const auto& basis = *ideal.basis;
    const std::string vars = " over [" + names_list(ideal.names) + "]";
    if (is_unit_ideal(basis))
        return not_conjugate(route + ": reduced Groebner basis is {1}" + vars);
    if (auto w = real_infeasibility_witness(basis))
        return not_conjugate(route + ": basis element " + w->to_string(ideal.names) + " has no real zero" + vars);
    // sums of even powers with no constant term force variables to vanish
    std::vector<MultiPoly> forced;
    std::string forcing;
    for (const auto& p : basis) {
        bool even = true, pure = true;
        int sign = 0;
        std::vector<int> vs;
        for (const auto& [m, c] : p.terms()) {
            int nz = 0, v = -1;
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) {
                    ++nz;
                    v = static_cast<int>(i);
                    even = even && m[i] % 2 == 0;
                }
            pure = pure && nz == 1;
            int s = sgn(c) > 0 ? 1 : -1;
            sign = sign == 0 ? s : sign;
            even = even && s == sign;
            vs.push_back(v);
        }
        if (even && pure && p.terms().size() > 1) {
            for (int v : vs)
                forced.push_back(MultiPoly::var(static_cast<int>(ideal.names.size()), v));
            forcing = p.to_string(ideal.names);
        }
    }
    if (!forced.empty()) {
        PolyIdeal sub{ideal.names, *ideal.basis, std::nullopt};
        for (const auto& f : forced)
            sub.generators.push_back(f);
        if (buchberger(sub, budget) && is_unit_ideal(*sub.basis))
            return not_conjugate(route + ": real zeros of " + forcing + " force its variables to 0, then 1 is in the ideal" + vars);
    }
    if (auto x = rational_point(basis, static_cast<int>(ideal.names.size()))) {
        GroupElement4 w = evaluate(g, *x);
        if (verify_witness(w, e, e2))
            return conjugate(w, route + ": rational point of the Groebner basis");
    }
    return std::nullopt;
}

std::optional<GroupElement4> positive_point(PolyIdeal& ideal, const std::array<PolyMatrix, 4>& g, const TensorElement& e,
                                            const TensorElement& e2, const GroebnerBudget& budget)
{
    if (!buchberger(ideal, budget))
        return std::nullopt;
    // short restarts reach sign choices a single depth-first run never revisits
    for (std::uint64_t seed = 1; seed <= 16; ++seed)
        for (const auto& x : rational_points(*ideal.basis, static_cast<int>(ideal.names.size()), 8, seed)) {
            GroupElement4 w = evaluate(g, x);
            if (verify_scaled_witness(w, e, e2))
                return w;
        }
    return std::nullopt;
}

// Rational g with positive determinants and act(g, e) = e2: over the
// centralizer of h, then over the whole group.
std::optional<GroupElement4> scaled_witness(const QMatrix& h, const TensorElement& e, const TensorElement& e2,
                                            const GroebnerBudget& budget)
{
    ReducedIdeal r = centralizer_ideal(h, e, e2, false);
    if (auto w = positive_point(r.ideal, r.g, e, e2, budget))
        return w;
    PolyIdeal full = conjugacy_ideal(e, e2);
    full.generators.erase(full.generators.begin(), full.generators.begin() + 4);
    std::array<PolyMatrix, 4> g;
    for (int k = 0; k < 4; ++k)
        for (int q = 0; q < 4; ++q)
            g[k][q] = MultiPoly::var(16, 4 * k + q);
    return positive_point(full, g, e, e2, budget);
}

}  // namespace

bool verify_scaled_witness(const GroupElement4& g, const TensorElement& e, const TensorElement& e2)
{
    for (const auto& m : g.g)
        if (sgn(determinant(m)) <= 0)
            return false;
    return act(g, e) == e2;
}

bool verify_verdict(const ConjugacyVerdict& v, const TensorElement& e, const TensorElement& e2)
{
    if (v.kind != ConjugacyVerdict::Kind::Conjugate || !v.witness)
        return false;
    return v.scaled ? verify_scaled_witness(*v.witness, e, e2) : verify_witness(*v.witness, e, e2);
}

ConjugacyVerdict decide_conjugacy(const TensorElement& e, const TensorElement& e2, const DecideOptions& opt)
{
    if (e == e2)
        return conjugate(GroupElement4::identity(), "equal elements");
    if (e.is_zero() || e2.is_zero())
        return not_conjugate("exactly one element is zero");
    if (opt.invariant_precheck)
        if (auto d = invariant_difference(e, e2))
            return not_conjugate(*d);
    if (opt.witness_search)
        if (auto g = sign_matrix_witness(e, e2))
            return conjugate(*g, "sign-matrix search");

    bool budget_hit = false;
    if (auto h = shared_characteristic(e, e2)) {
        ReducedIdeal r = centralizer_ideal(*h, e, e2);
        if (buchberger(r.ideal, opt.budget)) {
            if (auto v = analyse(r.ideal, r.g, e, e2, opt.budget, "centralizer of a shared characteristic"))
                return *v;
            if (opt.witness_search)
                if (auto w = scaled_witness(*h, e, e2, opt.budget)) {
                    ConjugacyVerdict v = conjugate(*w, "positive-determinant point of the centralizer ideal");
                    v.scaled = true;
                    return v;
                }
        } else {
            budget_hit = true;
        }
    }
    if (opt.full_fallback) {
        PolyIdeal full = conjugacy_ideal(e, e2);
        std::array<PolyMatrix, 4> g;
        for (int k = 0; k < 4; ++k)
            for (int q = 0; q < 4; ++q)
                g[k][q] = MultiPoly::var(16, 4 * k + q);
        if (buchberger(full, opt.budget)) {
            if (auto v = analyse(full, g, e, e2, opt.budget, "full group ideal"))
                return *v;
        } else {
            budget_hit = true;
        }
    }
    ConjugacyVerdict v;
    v.reason = budget_hit ? "Groebner budget exhausted" : "no witness and no infeasibility certificate";
    return v;
}

ClassSplit split_classes(const std::vector<OrbitRecord>& records, const DecideOptions& opt)
{
    ClassSplit out;
    std::map<std::tuple<Label, Label, Label, Fingerprint>, std::vector<size_t>> by_key;
    for (const auto& r : records) {
        auto& idx = by_key[{r.alpha, r.gamma, r.beta, r.signatures}];
        bool fresh = true;
        for (size_t i : idx) {
            auto v = decide_conjugacy(out.classes[i].rep, r.rep, opt);
            if (v.kind == ConjugacyVerdict::Kind::NotConjugate)
                continue;
            if (v.kind == ConjugacyVerdict::Kind::Unknown)
                ++out.unknown_pairs;
            fresh = false;
            break;
        }
        if (fresh) {
            idx.push_back(out.classes.size());
            out.classes.push_back(r);
        }
    }
    return out;
}

std::vector<OrbitRecord> unmatched_classes(const std::vector<OrbitRecord>& a, const std::vector<OrbitRecord>& b,
                                           const DecideOptions& opt)
{
    std::vector<OrbitRecord> out;
    for (const auto& x : a) {
        bool found = false;
        for (const auto& y : b) {
            if (x.key() != y.key())
                continue;
            if (decide_conjugacy(x.rep, y.rep, opt).kind == ConjugacyVerdict::Kind::Conjugate) {
                found = true;
                break;
            }
        }
        if (!found)
            out.push_back(x);
    }
    return out;
}

}  // namespace atlas
