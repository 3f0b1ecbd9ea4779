#include "atlas/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace atlas {

namespace {

const Eps kSimpleEps[4] = {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}};

int dot(const Eps& a, const Eps& b)
{
    int s = 0;
    for (int i = 0; i < 4; ++i)
        s += a[i] * b[i];
    return s;
}

}  // namespace

Eps to_eps(const RootC& c)
{
    Eps v{};
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            v[i] += c[k] * kSimpleEps[k][i];
    return v;
}

RootC from_eps(const Eps& v)
{
    // inverse of the simple-root matrix
    RootC c{};
    c[0] = v[0];
    c[1] = v[0] + v[1];
    // v2 = -c2 + c3 + c4, v3 = c3 - c4
    c[2] = (v[2] + c[1] + v[3]) / 2;
    c[3] = (v[2] + c[1] - v[3]) / 2;
    return c;
}

int inner(const RootC& a, const RootC& b) { return dot(to_eps(a), to_eps(b)); }

RootC negate(const RootC& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

RootC reflect(const RootC& b, const RootC& a)
{
    int k = inner(b, a);
    return {b[0] - k * a[0], b[1] - k * a[1], b[2] - k * a[2], b[3] - k * a[3]};
}

bool is_root(const RootC& c)
{
    Eps v = to_eps(c);
    if (dot(v, v) != 2)
        return false;
    // coefficients all >= 0 or all <= 0
    bool pos = true, neg = true;
    for (int x : c) {
        if (x < 0)
            pos = false;
        if (x > 0)
            neg = false;
    }
    return pos || neg;
}

bool in_phi1(const RootC& c) { return (c[1] % 2 + 2) % 2 == 1; }

std::string root_name(const RootC& c)
{
    std::string s;
    for (int k = 0; k < 4; ++k) {
        if (!c[k])
            continue;
        int a = c[k];
        if (a < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (std::abs(a) > 1)
            s += std::to_string(std::abs(a));
        s += "a" + std::to_string(k + 1);
    }
    return s.empty() ? "0" : s;
}

static RootSystem build_roots()
{
    RootSystem R;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    RootC r{a, b, c, d};
                    if (is_root(r))
                        R.all.push_back(r);
                }
    std::sort(R.all.begin(), R.all.end());
    for (const auto& r : R.all)
        (in_phi1(r) ? R.phi1 : R.phi0).push_back(r);
    R.simple = {RootC{1, 0, 0, 0}, RootC{0, 1, 0, 0}, RootC{0, 0, 1, 0}, RootC{0, 0, 0, 1}};
    R.alpha0 = {1, 2, 1, 1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            R.cartan[i][j] = inner(R.simple[i], R.simple[j]);
    return R;
}

const RootSystem& roots()
{
    static const RootSystem R = build_roots();
    return R;
}

Eps WeylElement::apply_eps(const Eps& v) const
{
    Eps w{};
    for (int i = 0; i < 4; ++i)
        w[i] = sign[i] * v[perm[i]];
    return w;
}

RootC WeylElement::apply_root(const RootC& c) const { return from_eps(apply_eps(to_eps(c))); }

WeylElement WeylElement::compose(const WeylElement& o) const
{
    WeylElement r;
    for (int i = 0; i < 4; ++i) {
        r.perm[i] = o.perm[perm[i]];
        r.sign[i] = sign[i] * o.sign[perm[i]];
    }
    return r;
}

WeylElement reflection(const RootC& a)
{
    // roots are +-e_i +- e_j: the reflection swaps/negates the two coordinates
    Eps v = to_eps(a);
    int i = -1, j = -1;
    for (int k = 0; k < 4; ++k)
        if (v[k]) {
            if (i < 0)
                i = k;
            else
                j = k;
        }
    WeylElement w;
    int s = -v[i] * v[j];
    w.perm[i] = j;
    w.perm[j] = i;
    w.sign[i] = s;
    w.sign[j] = s;
    return w;
}

std::vector<WeylElement> weyl_group(const std::vector<RootC>& generators)
{
    std::vector<WeylElement> gens;
    for (const auto& g : generators)
        gens.push_back(reflection(g));
    std::set<WeylElement> seen{WeylElement{}};
    std::vector<WeylElement> queue{WeylElement{}};
    for (size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens) {
            WeylElement w = g.compose(queue[q]);
            if (seen.insert(w).second)
                queue.push_back(w);
        }
    return std::vector<WeylElement>(seen.begin(), seen.end());
}

const std::vector<WeylElement>& weyl_W()
{
    static const std::vector<WeylElement> W = weyl_group({roots().simple.begin(), roots().simple.end()});
    return W;
}

const std::vector<WeylElement>& weyl_W0()
{
    const auto& R = roots();
    static const std::vector<WeylElement> W0 = weyl_group({R.simple[0], R.alpha0, R.simple[2], R.simple[3]});
    return W0;
}

std::vector<WeylElement> real_weyl(const std::array<FactorKind, 4>& kinds)
{
    const auto& R = roots();
    const RootC factor_root[4] = {R.simple[0], R.alpha0, R.simple[3], R.simple[2]};
    std::vector<RootC> gens;
    for (int k = 0; k < 4; ++k)
        if (kinds[k] == FactorKind::split)
            gens.push_back(factor_root[k]);
    return weyl_group(gens);
}

static std::map<RootC, QMatrix> build_root_vectors()
{
    const auto& m = model();
    std::map<RootC, QMatrix> pos;
    std::vector<RootC> frontier;
    for (int i = 0; i < 4; ++i) {
        RootC c{};
        c[i] = 1;
        pos[c] = m.e[i + 1];
        frontier.push_back(c);
    }
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        std::vector<RootC> next;
        for (const auto& c : frontier)
            for (int i = 0; i < 4; ++i) {
                RootC c2 = c;
                ++c2[i];
                if (pos.count(c2))
                    continue;
                QMatrix y = bracket(m.e[i + 1], pos[c]);
                if (!y.is_zero()) {
                    pos[c2] = y;
                    next.push_back(c2);
                }
            }
        frontier = std::move(next);
    }
    std::map<RootC, QMatrix> all;
    for (const auto& [c, x] : pos) {
        all[c] = x;
        all[negate(c)] = x.transpose();
    }
    // sign calibration against the weight dictionary of the all-of-g carrier
    for (RootC c : {RootC{1, 1, 1, 0}, RootC{1, 1, 0, 1}, RootC{-1, -1, 0, 0}})
        all[c] = scale(all[c], -1);
    return all;
}

const QMatrix& root_vector(const RootC& c)
{
    static const std::map<RootC, QMatrix> X = build_root_vectors();
    auto it = X.find(c);
    if (it == X.end())
        throw std::invalid_argument("root_vector: not a root " + root_name(c));
    return it->second;
}

QMatrix coroot(const RootC& c)
{
    const QMatrix& x = root_vector(c);
    QMatrix h = bracket(x, root_vector(negate(c)));
    QMatrix y = bracket(h, x);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (sgn(x(i, j)) != 0)
                return scale(h, Q(2) * x(i, j) / y(i, j));
    throw std::logic_error("coroot: zero root vector");
}

QMatrix torus_element(const std::array<Q, 4>& x)
{
    QMatrix h(8, 8);
    for (int i = 0; i < 4; ++i) {
        h(i, i) = x[i];
        h(4 + i, 4 + i) = -x[i];
    }
    return h;
}

std::optional<std::array<Q, 4>> torus_coords(const QMatrix& h)
{
    std::array<Q, 4> x;
    for (int i = 0; i < 4; ++i)
        x[i] = h(i, i);
    if (!(torus_element(x) == h))
        return std::nullopt;
    return x;
}

Q root_value(const RootC& c, const std::array<Q, 4>& x)
{
    Eps v = to_eps(c);
    Q s = 0;
    for (int i = 0; i < 4; ++i)
        s += v[i] * x[i];
    return s;
}

const std::array<FactorTriple, 4>& factor_triples()
{
    static const std::array<FactorTriple, 4> ft = [] {
        const auto& m = model();
        return std::array<FactorTriple, 4>{
            FactorTriple{m.h[1], m.e[1], m.f[1]},
            FactorTriple{m.h[0], m.e[0], m.f[0]},
            FactorTriple{scale(m.h[4], -1), m.f[4], m.e[4]},
            FactorTriple{scale(m.h[3], -1), m.f[3], m.e[3]},
        };
    }();
    return ft;
}

std::string label_string(const Label& l)
{
    std::string s = "(";
    for (int i = 0; i < 4; ++i)
        s += (i ? "," : "") + std::to_string(l[i]);
    return s + ")";
}

static long to_long(const Q& q)
{
    if (q.get_den() != 1)
        throw std::logic_error("label: non-integral value " + q.get_str());
    return q.get_num().get_si();
}

Label alpha_label(const QMatrix& h)
{
    auto roots_h = integer_roots(charpoly(h));
    if (!roots_h)
        throw std::invalid_argument("alpha_label: h has non-integral eigenvalues");
    std::vector<long> abs_ev;
    for (long r : *roots_h)
        abs_ev.push_back(std::labs(r));
    std::sort(abs_ev.rbegin(), abs_ev.rend());
    long x[4];
    for (int i = 0; i < 4; ++i)
        x[i] = abs_ev[2 * i];
    if (sgn(pfaffian(model().M * h)) < 0)
        x[3] = -x[3];
    return {static_cast<int>(x[0] - x[1]), static_cast<int>(x[1] - x[2]), static_cast<int>(x[2] + x[3]),
            static_cast<int>(x[2] - x[3])};
}

Label alpha_label_torus(const std::array<Q, 4>& x)
{
    const auto& R = roots();
    for (const auto& w : weyl_W()) {
        // (w x)_i = sign_i x_{perm_i}
        std::array<Q, 4> y;
        for (int i = 0; i < 4; ++i)
            y[i] = w.sign[i] * x[w.perm[i]];
        Label l;
        bool dom = true;
        for (int k = 0; k < 4; ++k) {
            Q v = root_value(R.simple[k], y);
            if (sgn(v) < 0) {
                dom = false;
                break;
            }
            l[k] = static_cast<int>(to_long(v));
        }
        if (dom)
            return l;
    }
    throw std::logic_error("alpha_label_torus: no dominant element");
}

Label gamma_label(const QMatrix& h)
{
    const auto& ft = factor_triples();
    std::vector<QMatrix> basis;
    for (const auto& t : ft) {
        basis.push_back(t.H);
        basis.push_back(t.E);
        basis.push_back(t.F);
    }
    auto c = coords(h, basis);
    if (!c)
        throw std::invalid_argument("gamma_label: h not in g0");
    Label l;
    for (int k = 0; k < 4; ++k) {
        const Q& a = (*c)[3 * k];
        const Q& b = (*c)[3 * k + 1];
        const Q& cc = (*c)[3 * k + 2];
        // aH + bE + cF acts on V2 with eigenvalues +-sqrt(a^2 + bc)
        auto t = rational_sqrt(a * a + b * cc);
        if (!t)
            throw std::invalid_argument("gamma_label: factor component is not R-diagonalizable with rational eigenvalues");
        l[k] = static_cast<int>(to_long(2 * *t));
    }
    return l;
}

Label gamma_label_torus(const std::array<Q, 4>& x)
{
    const auto& R = roots();
    const RootC order[4] = {R.simple[0], R.alpha0, R.simple[3], R.simple[2]};
    for (const auto& w : weyl_W0()) {
        std::array<Q, 4> y;
        for (int i = 0; i < 4; ++i)
            y[i] = w.sign[i] * x[w.perm[i]];
        Label l;
        bool dom = true;
        for (int k = 0; k < 4; ++k) {
            Q v = root_value(order[k], y);
            if (sgn(v) < 0) {
                dom = false;
                break;
            }
            l[k] = static_cast<int>(to_long(v));
        }
        if (dom)
            return l;
    }
    throw std::logic_error("gamma_label_torus: no dominant element");
}

CayleyImage cayley_transform(const Sl2Triple& t)
{
    GMatrix e(t.e), f(t.f), h(t.h);
    Gauss i = Gauss::i();
    Gauss half(Q(1, 2));
    CayleyImage c;
    c.h = (e - f).scaled(i);
    c.e = (h - e.scaled(i) - f.scaled(i)).scaled(half);
    c.f = (h + e.scaled(i) + f.scaled(i)).scaled(half);
    return c;
}

namespace {

std::vector<Q> mat_vec(const QMatrix& m, const std::vector<Q>& v)
{
    std::vector<Q> r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k)
            if (sgn(m(i, k)) != 0)
                r[i] += m(i, k) * v[k];
    return r;
}

Q vdot(const std::vector<Q>& a, const std::vector<Q>& b)
{
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool nonzero(const std::vector<Q>& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return true;
    return false;
}

std::vector<std::vector<Q>> independent(const std::vector<std::vector<Q>>& vs, int n)
{
    if (vs.empty())
        return {};
    QMatrix a(0, 0);
    for (const auto& v : vs)
        a.append_row(v);
    Rref R = rref(a);
    std::vector<std::vector<Q>> out;
    for (int i = 0; i < R.m.rows(); ++i)
        out.push_back(R.m.row(i));
    (void)n;
    return out;
}

// Orthogonal basis for a symmetric bilinear form given by its Gram matrix.
std::vector<std::pair<std::vector<Q>, Q>> congruence_diagonalize(const QMatrix& gram)
{
    int n = gram.rows();
    auto b = [&](const std::vector<Q>& u, const std::vector<Q>& v) { return vdot(u, mat_vec(gram, v)); };
    std::vector<std::vector<Q>> vecs;
    for (int i = 0; i < n; ++i) {
        std::vector<Q> v(n);
        v[i] = 1;
        vecs.push_back(v);
    }
    std::vector<std::pair<std::vector<Q>, Q>> out;
    while (!vecs.empty()) {
        std::vector<Q> pick;
        for (const auto& v : vecs)
            if (sgn(b(v, v)) != 0) {
                pick = v;
                break;
            }
        if (pick.empty()) {
            for (size_t i = 0; i < vecs.size() && pick.empty(); ++i)
                for (size_t j = i + 1; j < vecs.size(); ++j)
                    if (sgn(b(vecs[i], vecs[j])) != 0) {
                        pick = vecs[i];
                        for (int k = 0; k < n; ++k)
                            pick[k] += vecs[j][k];
                        break;
                    }
            if (pick.empty()) {
                for (const auto& v : vecs)
                    out.emplace_back(v, Q(0));
                break;
            }
        }
        Q dv = b(pick, pick);
        out.emplace_back(pick, dv);
        std::vector<std::vector<Q>> rest;
        for (const auto& v : vecs) {
            Q c = b(v, pick) / dv;
            std::vector<Q> w = v;
            for (int k = 0; k < n; ++k)
                w[k] -= c * pick[k];
            if (nonzero(w))
                rest.push_back(w);
        }
        vecs = independent(rest, n);
    }
    return out;
}

// Darboux basis for a nondegenerate antisymmetric form.
std::vector<std::pair<std::vector<Q>, std::vector<Q>>> symplectic_basis(const QMatrix& gram)
{
    int n = gram.rows();
    auto b = [&](const std::vector<Q>& u, const std::vector<Q>& v) { return vdot(u, mat_vec(gram, v)); };
    std::vector<std::vector<Q>> vecs;
    for (int i = 0; i < n; ++i) {
        std::vector<Q> v(n);
        v[i] = 1;
        vecs.push_back(v);
    }
    std::vector<std::pair<std::vector<Q>, std::vector<Q>>> pairs;
    while (!vecs.empty()) {
        std::vector<Q> u = vecs[0], w;
        for (size_t i = 1; i < vecs.size(); ++i)
            if (sgn(b(u, vecs[i])) != 0) {
                w = vecs[i];
                break;
            }
        if (w.empty())
            throw std::logic_error("symplectic_basis: degenerate form");
        Q c = b(u, w);
        for (auto& x : w)
            x /= c;
        pairs.emplace_back(u, w);
        std::vector<std::vector<Q>> rest;
        for (const auto& v : vecs) {
            Q bw = b(v, w), bu = b(v, u);
            std::vector<Q> x(n);
            for (int k = 0; k < n; ++k)
                x[k] = v[k] - bw * u[k] + bu * w[k];
            if (nonzero(x))
                rest.push_back(x);
        }
        vecs = independent(rest, n);
    }
    return pairs;
}

Q factorial(int n)
{
    Q r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

std::vector<std::vector<Q>> kernel(const std::vector<std::pair<const QMatrix*, Q>>& ops)
{
    QMatrix a(0, 0);
    for (const auto& [m, lam] : ops)
        for (int i = 0; i < 8; ++i) {
            std::vector<Q> r(8);
            for (int j = 0; j < 8; ++j)
                r[j] = (*m)(i, j) - (i == j ? lam : Q(0));
            a.append_row(r);
        }
    return nullspace(a);
}

// (mu-pair on the tau = +1 eigenspace, mu-pair on tau = -1), ordered by orientation
std::array<std::pair<int, int>, 2> beta_pairs(const QMatrix& S, const QMatrix& A)
{
    const auto& m = model();
    QMatrix tau = m.M * S;
    std::array<std::pair<int, int>, 2> res;
    int slot = 0;
    for (int sg : {1, -1}) {
        auto W = kernel({{&tau, Q(sg)}});
        if (W.size() != 4)
            throw std::logic_error("beta: tau eigenspace has wrong dimension");
        QMatrix Gs(4, 4), Am(4, 4), Pr(4, 4);
        for (int i = 0; i < 4; ++i) {
            auto Su = mat_vec(S, W[i]);
            for (int j = 0; j < 4; ++j) {
                Gs(i, j) = vdot(W[j], Su);
                Am(i, j) = vdot(W[i], mat_vec(S, mat_vec(A, W[j])));
            }
            for (int j = 0; j < 4; ++j)
                Pr(i, j) = (W[i][j] + sg * W[i][4 + j]) / 2;
        }
        QMatrix X = *inverse(Gs) * Am;
        auto cp = charpoly(X);
        const Q& p = cp[2];
        const Q& q = cp[4];
        auto sd = rational_sqrt(p * p - 4 * q);
        if (!sd)
            throw std::logic_error("beta: irrational discriminant");
        auto m1 = rational_sqrt((p + *sd) / 2), m2 = rational_sqrt((p - *sd) / 2);
        if (!m1 || !m2)
            throw std::logic_error("beta: irrational eigenvalue");
        int orient = sgn(pfaffian(Am)) * sgn(determinant(Pr));
        int a = static_cast<int>(to_long(*m1 + *m2));
        int b = static_cast<int>(to_long(abs(*m1 - *m2)));
        res[slot++] = orient >= 0 ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    return res;
}

Label beta_from_pairs(const std::array<std::pair<int, int>, 2>& b)
{
    return {b[0].second, b[0].first, b[1].second, b[1].first};
}

}  // namespace

QMatrix cayley_form(const Sl2Triple& t)
{
    const auto& m = model();
    auto ev = integer_roots(charpoly(t.h));
    if (!ev)
        throw std::invalid_argument("cayley_form: h has non-integral eigenvalues");
    std::set<long> evs(ev->begin(), ev->end());
    std::vector<std::pair<std::vector<Q>, Q>> blocks;
    auto fpow = [&](std::vector<Q> v, int a) {
        for (int i = 0; i < a; ++i)
            v = mat_vec(t.f, v);
        return v;
    };
    for (long n : evs) {
        if (n < 0)
            continue;
        auto U = kernel({{&t.e, Q(0)}, {&t.h, Q(n)}});
        if (U.empty())
            continue;
        int d = static_cast<int>(U.size());
        QMatrix gram(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                gram(i, j) = vdot(U[i], mat_vec(m.M, fpow(U[j], static_cast<int>(n)))) / factorial(static_cast<int>(n));
        std::vector<Q> ca;
        for (int a = 0; a <= n; ++a)
            ca.push_back(factorial(a) * factorial(static_cast<int>(n)) / factorial(static_cast<int>(n) - a));
        auto comb = [&](const std::vector<Q>& c) {
            std::vector<Q> v(8);
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < 8; ++k)
                    v[k] += c[i] * U[i][k];
            return v;
        };
        if (n % 2 == 0) {
            for (const auto& [c, dv] : congruence_diagonalize(gram)) {
                if (sgn(dv) == 0)
                    throw std::logic_error("cayley_form: degenerate highest-weight form");
                auto u = comb(c);
                for (int a = 0; a <= n; ++a)
                    blocks.emplace_back(fpow(u, a), ca[a] * abs(dv));
            }
        } else {
            for (const auto& [cu, cw] : symplectic_basis(gram)) {
                auto u = comb(cu), w = comb(cw);
                for (int a = 0; a <= n; ++a) {
                    blocks.emplace_back(fpow(u, a), ca[a]);
                    blocks.emplace_back(fpow(w, a), ca[a]);
                }
            }
        }
    }
    if (blocks.size() != 8)
        throw std::logic_error("cayley_form: incomplete weight basis");
    QMatrix P(8, 8), Gd(8, 8);
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i)
            P(i, j) = blocks[j].first[i];
        Gd(j, j) = blocks[j].second;
    }
    auto Pi = inverse(P);
    if (!Pi)
        throw std::logic_error("cayley_form: singular weight basis");
    QMatrix S = Pi->transpose() * Gd * *Pi;
    if (!(S * m.M * S == m.M) || !(t.e.transpose() * S == S * t.f) || !(t.h.transpose() * S == S * t.h))
        throw std::logic_error("cayley_form: compatibility check failed");
    return S;
}

Label beta_label(const Sl2Triple& t)
{
    QMatrix S = cayley_form(t);
    return beta_from_pairs(beta_pairs(S, t.e - t.f));
}

Label beta_label_cayley(const Sl2Triple& t)
{
    if (!verify_cayley(t))
        throw std::invalid_argument("beta_label_cayley: not a real Cayley triple");
    CayleyImage c = cayley_transform(t);
    // h' = i(e - f) lies in k^c; its imaginary part is the real element e - f of k
    if (!c.h.real_part().is_zero())
        throw std::logic_error("beta_label_cayley: Cayley image not purely imaginary");
    return beta_from_pairs(beta_pairs(QMatrix::identity(8), c.h.imag_part()));
}

}  // namespace atlas
