#include "atlas/carrier.hpp"

#include "atlas/classify.hpp"
#include "atlas/liealg.hpp"

#include <algorithm>
#include <set>

namespace atlas {

std::vector<QMatrix> CarrierAlgebra::basis() const
{
    std::vector<QMatrix> b = s0;
    b.insert(b.end(), s1.begin(), s1.end());
    b.insert(b.end(), sm1.begin(), sm1.end());
    return b;
}

namespace {

RootC add(const RootC& a, const RootC& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
RootC sub(const RootC& a, const RootC& b) { return add(a, negate(b)); }

int rank_of(const std::vector<RootC>& rs)
{
    QMatrix m(static_cast<int>(rs.size()), 4);
    for (size_t i = 0; i < rs.size(); ++i)
        for (int k = 0; k < 4; ++k)
            m(static_cast<int>(i), k) = rs[i][k];
    return rank(m);
}

std::set<RootC> reflection_closure(const std::vector<RootC>& pi)
{
    std::set<RootC> s;
    for (const auto& p : pi) {
        s.insert(p);
        s.insert(negate(p));
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& b : std::vector<RootC>(s.begin(), s.end()))
            for (const auto& a : pi)
                grew = s.insert(reflect(b, a)).second || grew;
    }
    return s;
}

// integer coordinates of b over pi
std::vector<Q> coords_over(const std::vector<RootC>& pi, const RootC& b)
{
    QMatrix a(4, static_cast<int>(pi.size()));
    for (size_t j = 0; j < pi.size(); ++j)
        for (int k = 0; k < 4; ++k)
            a(k, static_cast<int>(j)) = pi[j][k];
    std::vector<Q> rhs(b.begin(), b.end());
    auto s = solve(a, rhs);
    if (!s)
        throw std::logic_error("coords_over: root outside span");
    return *s;
}

using Graded = std::map<RootC, int>;

Graded canonical_w0(const Graded& g)
{
    Graded best = g;
    for (const auto& w : weyl_W0()) {
        Graded img;
        for (const auto& [r, d] : g)
            img[w.apply_root(r)] = d;
        if (img < best)
            best = img;
    }
    return best;
}

std::optional<std::vector<Q>> solve_in_span(const std::vector<QMatrix>& space, const std::vector<QMatrix>& images,
                                             const QMatrix& rhs)
{
    QMatrix a(64, static_cast<int>(space.size()));
    for (size_t j = 0; j < images.size(); ++j) {
        auto f = flatten(images[j]);
        for (int i = 0; i < 64; ++i)
            a(i, static_cast<int>(j)) = f[i];
    }
    return solve(a, flatten(rhs));
}

// Element of s1 with coefficients 1, 2, 3, ... (then shifted) in general position.
std::optional<QMatrix> generic_element(const CarrierAlgebra& c)
{
    for (int shift = 0; shift < 8; ++shift) {
        QMatrix e = zero8();
        for (size_t i = 0; i < c.s1.size(); ++i)
            e = e + scale(c.s1[i], Q(static_cast<long>(i + 1 + shift * (i % 2 ? 1 : 3))));
        if (in_general_position(c, e))
            return e;
    }
    return std::nullopt;
}

bool torus_maximal(const CarrierAlgebra& c, const QMatrix& e)
{
    const auto& m = model();
    Sl2Triple t = complete_to_sl2(e);
    auto z = centralizer(m.g0, {t.h, t.e, t.f});
    QMatrix rows(static_cast<int>(c.degree.size()), 4);
    int i = 0;
    for (const auto& [r, d] : c.degree) {
        Eps v = to_eps(r);
        for (int k = 0; k < 4; ++k)
            rows(i, k) = v[k];
        ++i;
    }
    std::vector<QMatrix> tp;
    for (const auto& v : nullspace(rows))
        tp.push_back(torus_element({v[0], v[1], v[2], v[3]}));
    if (tp.empty())
        return z.empty();
    return centralizer(z, tp).size() == tp.size();
}

}  // namespace

CarrierAlgebra carrier_from_degrees(const std::map<RootC, int>& degree, std::string name)
{
    CarrierAlgebra c;
    c.name = std::move(name);
    c.degree = degree;
    std::vector<QMatrix> cart;
    for (const auto& [r, d] : degree) {
        if (d == 0)
            c.s0.push_back(root_vector(r));
        else if (d == 1)
            c.s1.push_back(root_vector(r));
        else if (d == -1)
            c.sm1.push_back(root_vector(r));
        cart.push_back(coroot(r));
    }
    auto t = span_basis(cart);
    c.s0.insert(c.s0.begin(), t.begin(), t.end());
    return c;
}

std::vector<CarrierAlgebra> enumerate_complex_carriers()
{
    const auto& all = roots().all;
    std::vector<std::pair<std::vector<RootC>, Graded>> graded;
    std::set<Graded> seen_keys;
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i)
            idx[i] = i;
        for (;;) {
            std::vector<RootC> pi;
            for (int i : idx)
                pi.push_back(all[i]);
            bool ok = rank_of(pi) == n;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    if (a != b)
                        ok = inner(pi[a], pi[b]) <= 0 && !is_root(sub(pi[a], pi[b]));
            if (ok) {
                Graded g;
                for (const auto& b : reflection_closure(pi)) {
                    auto co = coords_over(pi, b);
                    Q d = 0;
                    for (int j = 0; j < n; ++j)
                        d += co[j] * (in_phi1(pi[j]) ? 1 : 0);
                    g[b] = static_cast<int>(d.get_num().get_si());
                }
                if (seen_keys.insert(g).second)
                    graded.push_back({pi, g});
            }
            int k = n - 1;
            while (k >= 0 && idx[k] == static_cast<int>(all.size()) - n + k)
                --k;
            if (k < 0)
                break;
            ++idx[k];
            for (int j = k + 1; j < n; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<CarrierAlgebra> out;
    std::set<Graded> classes;
    for (const auto& [pi, g] : graded) {
        int n1 = 0, n0 = 0;
        for (const auto& [r, d] : g) {
            n1 += d == 1;
            n0 += d == 0;
        }
        std::vector<RootC> psi;
        for (const auto& [r, d] : g)
            psi.push_back(r);
        if (n1 == 0 || n1 != rank_of(psi) + n0)
            continue;  // not locally flat
        if (!classes.insert(canonical_w0(g)).second)
            continue;
        CarrierAlgebra c = carrier_from_degrees(g);
        c.pi = pi;
        auto e = generic_element(c);
        if (!e || !torus_maximal(c, *e))
            continue;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ComplexOrbit> complex_orbits()
{
    std::vector<ComplexOrbit> out;
    for (auto& c : enumerate_complex_carriers()) {
        ComplexOrbit o;
        QMatrix e = *generic_element(c);
        Sl2Triple t = complete_to_sl2(e);
        o.rep = sigma_inverse(e);
        o.alpha = alpha_label(t.h);
        o.gamma = gamma_label(t.h);
        o.dim = orbit_dim(e);
        o.table_row = complex_class_of(o.alpha, o.gamma);
        o.carrier = std::move(c);
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(), [](const ComplexOrbit& a, const ComplexOrbit& b) { return a.table_row < b.table_row; });
    for (auto& o : out)
        o.carrier.name = "complex carrier of row " + std::to_string(o.table_row);
    return out;
}

bool is_a3_chain(const RootC& b1, const RootC& b2, const RootC& b3)
{
    return inner(b1, b2) == -1 && inner(b2, b3) == -1 && inner(b1, b3) == 0;
}

A3Census a3_census()
{
    const auto& p1 = roots().phi1;
    std::vector<std::array<RootC, 3>> sets;
    for (size_t i = 0; i < p1.size(); ++i)
        for (size_t j = i + 1; j < p1.size(); ++j)
            for (size_t k = j + 1; k < p1.size(); ++k) {
                const RootC &a = p1[i], &b = p1[j], &c = p1[k];
                if (is_a3_chain(a, b, c))
                    sets.push_back({a, b, c});
                else if (is_a3_chain(b, a, c))
                    sets.push_back({b, a, c});
                else if (is_a3_chain(a, c, b))
                    sets.push_back({a, c, b});
            }
    A3Census r;
    r.subsets = static_cast<int>(sets.size());
    std::set<std::set<RootC>> seen;
    for (const auto& s : sets) {
        std::set<RootC> key(s.begin(), s.end());
        if (seen.count(key))
            continue;
        r.orbit_reps.push_back(s);
        for (const auto& w : weyl_W0())
            seen.insert({w.apply_root(s[0]), w.apply_root(s[1]), w.apply_root(s[2])});
    }
    r.orbits = static_cast<int>(r.orbit_reps.size());
    return r;
}

CarrierAlgebra carrier_full_split()
{
    Graded g;
    // s0 roots +-alpha1; s1 spanned by the six y-roots
    const std::vector<RootC> s1 = {{0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}, {0, -1, 0, 0}, {-1, -1, 0, 0}};
    std::array<Q, 4> h{};
    // grading element: alpha1 -> 0, s1 roots -> 1
    QMatrix a(7, 4);
    std::vector<Q> rhs;
    std::vector<RootC> eqs = s1;
    eqs.push_back({1, 0, 0, 0});
    for (size_t i = 0; i < eqs.size(); ++i) {
        Eps v = to_eps(eqs[i]);
        for (int k = 0; k < 4; ++k)
            a(static_cast<int>(i), k) = v[k];
        rhs.push_back(i < s1.size() ? 1 : 0);
    }
    auto x = solve(a, rhs);
    if (!x)
        throw std::logic_error("carrier_full_split: no grading element");
    for (int k = 0; k < 4; ++k)
        h[k] = (*x)[k];
    for (const auto& r : roots().all)
        g[r] = static_cast<int>(root_value(r, h).get_num().get_si());
    CarrierAlgebra c = carrier_from_degrees(g, "all of g, split Cartan");
    // keep the listed order of s1
    c.s1.clear();
    for (const auto& r : s1)
        c.s1.push_back(root_vector(r));
    return c;
}

CarrierAlgebra carrier_sl3_split()
{
    const RootC b1{1, 1, 1, 1}, b2{-1, -1, -1, 0};
    Graded g = {{b1, 1}, {b2, 1}, {add(b1, b2), 2}, {negate(b1), -1}, {negate(b2), -1}, {negate(add(b1, b2)), -2}};
    CarrierAlgebra c = carrier_from_degrees(g, "split sl3");
    c.pi = {b1, b2};
    c.s1 = {root_vector(b1), root_vector(b2)};
    return c;
}

CarrierAlgebra carrier_su12()
{
    const auto& m = model();
    auto x = [](const RootC& r) { return root_vector(r); };
    QMatrix y1 = x({0, 1, 0, 1}) - x({1, 1, 1, 1}) + x({-1, -1, 0, 0}) + x({0, -1, -1, 0});
    // y2 spans [x_alpha1 - x_-alpha1, y1], normalised to coefficient 1 on x_{alpha1+alpha2+alpha4}
    QMatrix y2 = bracket(x({1, 0, 0, 0}) - x({-1, 0, 0, 0}), y1);
    const std::vector<RootC> b2 = {{1, 1, 0, 1}, {0, 1, 1, 1}, {0, -1, 0, 0}, {-1, -1, -1, 0}};
    std::vector<QMatrix> b2v;
    for (const auto& r : b2)
        b2v.push_back(x(r));
    auto co = coords(y2, b2v);
    if (!co || sgn((*co)[0]) == 0)
        throw std::logic_error("carrier_su12: rotation leaves the y2 root spaces");
    y2 = scale(y2, 1 / (*co)[0]);
    CarrierAlgebra c;
    c.name = "su(1,2), three compact Cartan directions";
    c.cartan = "h0^14";
    c.s1 = {y1, y2};
    c.sm1 = {m.theta(y1), m.theta(y2)};
    std::vector<QMatrix> br;
    for (const auto& a : c.s1)
        for (const auto& b : c.sm1)
            br.push_back(bracket(a, b));
    c.s0 = span_basis(br);
    return c;
}

namespace {

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& a, int nvars)
{
    int n = static_cast<int>(a.size());
    // minors over the first rows, indexed by column subsets
    std::vector<MultiPoly> dp(size_t(1) << n, MultiPoly(nvars));
    dp[0] = MultiPoly::constant(nvars, 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int row = __builtin_popcount(mask);
        if (row >= n || dp[mask].is_zero())
            continue;
        int sign = 1;
        for (int col = n - 1; col >= 0; --col) {
            if (mask & (1u << col)) {
                sign = -sign;
                continue;
            }
            if (!a[row][col].is_zero())
                dp[mask | (1u << col)] = dp[mask | (1u << col)] + dp[mask] * a[row][col] * Q(sign);
        }
    }
    return dp[(1u << n) - 1];
}

}  // namespace

MultiPoly general_position_poly(const CarrierAlgebra& c)
{
    int m = static_cast<int>(c.s1.size());
    if (c.s0.size() != c.s1.size())
        throw std::invalid_argument("general_position_poly: carrier is not locally flat");
    std::vector<std::vector<MultiPoly>> a(m, std::vector<MultiPoly>(m, MultiPoly(m)));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) {
            auto co = coords(bracket(c.s0[j], c.s1[i]), c.s1);
            if (!co)
                throw std::logic_error("general_position_poly: [s0, s1] leaves s1");
            for (int r = 0; r < m; ++r)
                if (sgn((*co)[r]) != 0)
                    a[r][j] = a[r][j] + MultiPoly::var(m, i) * (*co)[r];
        }
    return poly_det(a, m);
}

bool in_general_position(const CarrierAlgebra& c, const QMatrix& e)
{
    std::vector<QMatrix> img;
    for (const auto& x : c.s0)
        img.push_back(bracket(x, e));
    return span_dim(img) == static_cast<int>(c.s1.size()) && in_span(e, c.s1);
}

bool proportional(const MultiPoly& p, const MultiPoly& q)
{
    if (p.is_zero() || q.is_zero())
        return p.is_zero() && q.is_zero();
    return p.monic() == q.monic();
}

GeneralPositionSet reduce_gamma(const CarrierAlgebra& c)
{
    GeneralPositionSet g;
    for (const auto& y : c.s1)
        g.basis.push_back(sigma_inverse(y));
    g.gp_poly = general_position_poly(c);
    std::vector<int> support;
    if (c.name == "all of g, split Cartan") {
        support = {0, 3, 4, 5};
        g.moves = {"exp(ad x_-alpha1) makes t1 nonzero", "exp(ad x_alpha1) clears t3",
                   "exp(ad x_-alpha1) clears t2", "diagonal torus scales t1, t4, t5, t6 to +-1",
                   "-I in one factor makes the leading coefficient +1"};
    } else if (c.name == "split sl3") {
        support = {0, 1};
        g.moves = {"diagonal torus scales t1, t2 to +-1", "-I in one factor makes the leading coefficient +1"};
    } else if (c.cartan == "h0^14") {
        support = {0};
        g.moves = {"compact rotation exp(ad(x_alpha1 - x_-alpha1)) clears t2", "noncompact direction h4 scales t1 to 1"};
    } else {
        g.unreduced = true;
        g.moves = {"no recipe stored"};
        return g;
    }
    int n = static_cast<int>(support.size());
    for (int j = 0; j < (1 << (n - 1)); ++j) {
        std::vector<Q> t(c.s1.size());
        t[support[0]] = 1;
        for (int i = 1; i < n; ++i)
            t[support[i]] = ((j >> (n - 1 - i)) & 1) ? -1 : 1;
        if (sgn(g.gp_poly.eval(t)) == 0)
            continue;
        TensorElement v;
        for (size_t i = 0; i < t.size(); ++i)
            v = v + g.basis[i] * t[i];
        for (int k = 0; k < 16; ++k)
            if (sgn(g.basis[support[0]][k]) != 0) {
                if (sgn(v[k]) < 0)
                    v = v * Q(-1);
                break;
            }
        g.candidates.push_back(v);
    }
    return g;
}

int real_rank_g0(const std::vector<QMatrix>& l)
{
    auto z = span_basis(l);
    if (z.empty())
        return 0;
    std::vector<QMatrix> br;
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            br.push_back(bracket(z[i], z[j]));
    int ss = span_dim(br);
    if (ss % 3 != 0)
        throw std::invalid_argument("real_rank_g0: derived algebra is not a sum of sl2's");
    auto center = centralizer(z, z);
    if (center.empty())
        return ss / 3;
    // each factor sees the centre through one semisimple line
    std::vector<std::array<QMatrix, 4>> fm;
    for (const auto& x : center)
        fm.push_back(g0_factor_matrices(x));
    std::vector<std::vector<Q>> elliptic_rows;
    for (int k = 0; k < 4; ++k) {
        const QMatrix* line = nullptr;
        for (const auto& f : fm)
            if (!f[k].is_zero()) {
                line = &f[k];
                break;
            }
        if (!line)
            continue;
        Q d = determinant(*line);
        if (sgn(d) == 0)
            throw std::invalid_argument("real_rank_g0: nilpotent central element; not reductive");
        if (sgn(d) < 0)
            continue;
        for (int entry = 0; entry < 4; ++entry) {
            std::vector<Q> row;
            for (const auto& f : fm)
                row.push_back(f[k](entry / 2, entry % 2));
            elliptic_rows.push_back(row);
        }
    }
    int elliptic = elliptic_rows.empty() ? 0 : rank(QMatrix::from_rows(elliptic_rows));
    return ss / 3 + static_cast<int>(center.size()) - elliptic;
}

bool corresponds(const TensorElement& v, const CarrierAlgebra& c)
{
    const auto& m = model();
    QMatrix e = sigma(v);
    if (!in_general_position(c, e))
        throw std::invalid_argument("corresponds: element is not in general position in s1");
    std::vector<QMatrix> img;
    for (const auto& y : c.sm1)
        img.push_back(bracket(bracket(e, y), e));
    auto a = solve_in_span(c.sm1, img, scale(e, 2));
    if (!a)
        throw std::logic_error("corresponds: no f in s-1");
    QMatrix f0 = zero8();
    for (size_t j = 0; j < c.sm1.size(); ++j)
        f0 = f0 + scale(c.sm1[j], (*a)[j]);
    QMatrix h = bracket(e, f0);
    auto t = complete_with_h(h, e);
    if (!t || !in_span(h, c.s0))
        throw std::logic_error("corresponds: triple does not close in s");
    int za = real_rank_g0(centralizer(m.g0, {t->h, t->e, t->f}));
    int zs = real_rank_g0(centralizer(m.g0, c.basis()));
    return za == zs;
}

int RealCartan::compact_dim() const
{
    return static_cast<int>(std::count(kinds.begin(), kinds.end(), FactorKind::compact));
}

std::string RealCartan::name() const { return "h0^" + std::to_string(id); }

std::vector<RealCartan> real_cartans()
{
    std::vector<RealCartan> out;
    for (int mask = 0; mask < 16; ++mask) {
        RealCartan t;
        t.id = mask + 1;
        for (int k = 0; k < 4; ++k)
            t.kinds[k] = (mask >> (3 - k)) & 1 ? FactorKind::compact : FactorKind::split;
        out.push_back(t);
    }
    return out;
}

std::array<int, 4> factor_coords(const RootC& c)
{
    static const auto hs = [] {
        std::array<std::array<Q, 4>, 4> x;
        for (int k = 0; k < 4; ++k)
            x[k] = *torus_coords(factor_triples()[k].H);
        return x;
    }();
    std::array<int, 4> out{};
    for (int k = 0; k < 4; ++k)
        out[k] = static_cast<int>(root_value(c, hs[k]).get_num().get_si());
    return out;
}

RootC conjugate_root(const RootC& c, const RealCartan& t)
{
    static const auto by_coords = [] {
        std::map<std::array<int, 4>, RootC> m;
        for (const auto& r : roots().all)
            m[factor_coords(r)] = r;
        return m;
    }();
    auto f = factor_coords(c);
    for (int k = 0; k < 4; ++k)
        if (t.kinds[k] == FactorKind::compact)
            f[k] = -f[k];
    return by_coords.at(f);
}

namespace {

bool defined_over_r(const Graded& g, const RealCartan& t)
{
    for (const auto& [r, d] : g) {
        auto it = g.find(conjugate_root(r, t));
        if (it == g.end() || it->second != d)
            return false;
    }
    return true;
}

// x_a (a in Phi0) normalises s iff a lies in Psi or is orthogonal to Psi.
bool strongly_regular(const Graded& g, const RealCartan& t)
{
    for (int k = 0; k < 4; ++k) {
        if (t.kinds[k] != FactorKind::compact)
            continue;
        for (int s : {1, -1}) {
            std::array<int, 4> f{};
            f[k] = 2 * s;
            RootC a{};
            for (const auto& r : roots().phi0)
                if (factor_coords(r) == f)
                    a = r;
            bool normalises = g.count(a) > 0;
            if (!normalises) {
                normalises = true;
                for (const auto& [r, d] : g)
                    normalises = normalises && inner(a, r) == 0;
            }
            if (normalises)
                return false;
        }
    }
    return true;
}

Graded canonical_under(const Graded& g, const std::vector<WeylElement>& w)
{
    Graded best = g;
    for (const auto& x : w) {
        Graded img;
        for (const auto& [r, d] : g)
            img[x.apply_root(r)] = d;
        if (img < best)
            best = img;
    }
    return best;
}

}  // namespace

std::vector<CarrierAlgebra> enumerate_real_carriers(const RealCartan& t)
{
    static const auto moved = [] {
        std::set<Graded> out;
        for (const auto& c : enumerate_complex_carriers())
            for (const auto& w : weyl_W()) {
                Graded img;
                bool parity = true;
                for (const auto& [r, d] : c.degree) {
                    RootC wr = w.apply_root(r);
                    parity = parity && in_phi1(wr) == (d % 2 != 0);
                    img[wr] = d;
                }
                if (!parity || out.count(img))
                    continue;
                CarrierAlgebra full = carrier_from_degrees(img);
                auto e = generic_element(full);
                if (e && torus_maximal(full, *e))
                    out.insert(img);
            }
        return out;
    }();
    const auto rw = real_weyl(t.kinds);
    std::set<Graded> seen;
    std::vector<CarrierAlgebra> out;
    for (const auto& g : moved) {
        if (!defined_over_r(g, t) || !strongly_regular(g, t))
            continue;
        if (!seen.insert(canonical_under(g, rw)).second)
            continue;
        CarrierAlgebra c;
        if (t.compact_dim() == 0) {
            c = carrier_from_degrees(g);
        } else {
            c.degree = g;
        }
        c.cartan = t.id == 1 ? "split" : t.name();
        int n1 = 0;
        for (const auto& [r, d] : g)
            n1 += d == 1;
        c.name = t.name() + ", " + std::to_string(g.size()) + " roots, s1 of dimension " + std::to_string(n1);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CarrierAlgebra> enumerate_real_carriers()
{
    std::vector<CarrierAlgebra> out;
    for (const auto& t : real_cartans()) {
        auto part = enumerate_real_carriers(t);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace atlas
