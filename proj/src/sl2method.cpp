#include "atlas/sl2method.hpp"

#include "atlas/carrier.hpp"
#include "atlas/liealg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace atlas {

namespace {

std::array<int, 4> to_key(const TorusPoint& x)
{
    std::array<int, 4> k;
    for (int i = 0; i < 4; ++i) {
        Q d = 2 * x[i];
        if (d.get_den() != 1)
            throw std::logic_error("characteristic with non-half-integral coordinate");
        k[i] = static_cast<int>(d.get_num().get_si());
    }
    return k;
}

// (alpha, gamma) pairs of the complex orbits found by the carrier route
const std::set<std::pair<Label, Label>>& carrier_classes()
{
    static const std::set<std::pair<Label, Label>> s = [] {
        std::set<std::pair<Label, Label>> out;
        for (const auto& o : complex_orbits())
            out.insert({o.alpha, o.gamma});
        return out;
    }();
    return s;
}

QMatrix action_on_g1(const LieElement& h)
{
    auto a = g0_factor_matrices(h);
    QMatrix m(16, 16);
    for (int t = 0; t < 16; ++t) {
        TensorElement d = derive(a, TensorElement::basis(t));
        for (int r = 0; r < 16; ++r)
            m(r, t) = d[r];
    }
    return m;
}

TensorElement combine_tensors(const std::vector<Q>& c, const std::vector<TensorElement>& u)
{
    TensorElement e;
    for (size_t i = 0; i < u.size(); ++i)
        e = e + u[i] * c[i];
    return e;
}

}  // namespace

int CharacteristicSet::homogeneous_count() const
{
    return static_cast<int>(std::count(homogeneous_flags.begin(), homogeneous_flags.end(), true));
}

TorusPoint characteristic_from_alpha(const Label& alpha)
{
    const auto& R = roots();
    QMatrix a(4, 4);
    std::vector<Q> b(4);
    for (int i = 0; i < 4; ++i) {
        Eps v = to_eps(R.simple[i]);
        for (int j = 0; j < 4; ++j)
            a(i, j) = v[j];
        b[i] = alpha[i];
    }
    auto x = solve(a, b);
    if (!x)
        throw std::logic_error("simple roots are not a basis of h0*");
    return {(*x)[0], (*x)[1], (*x)[2], (*x)[3]};
}

TorusPoint w0_dominant(const TorusPoint& x)
{
    const auto& R = roots();
    const RootC order[4] = {R.simple[0], R.alpha0, R.simple[3], R.simple[2]};
    for (const auto& w : weyl_W0()) {
        TorusPoint y;
        for (int i = 0; i < 4; ++i)
            y[i] = w.sign[i] * x[w.perm[i]];
        bool dom = true;
        for (const auto& r : order)
            if (sgn(root_value(r, y)) < 0)
                dom = false;
        if (dom)
            return y;
    }
    throw std::logic_error("no W0-dominant element in the orbit");
}

LieElement characteristic_from_gamma(const Label& gamma)
{
    const auto& R = roots();
    const RootC order[4] = {R.simple[0], R.alpha0, R.simple[3], R.simple[2]};
    QMatrix a(4, 4);
    std::vector<Q> b(4);
    for (int i = 0; i < 4; ++i) {
        Eps v = to_eps(order[i]);
        for (int j = 0; j < 4; ++j)
            a(i, j) = v[j];
        b[i] = gamma[i];
    }
    auto x = solve(a, b);
    if (!x)
        throw std::logic_error("g0 simple roots are not a basis of h0*");
    return torus_element({(*x)[0], (*x)[1], (*x)[2], (*x)[3]});
}

bool homogeneity_test(const LieElement& h, const HomogeneityOptions& opt)
{
    auto x = torus_coords(h);
    if (!x)
        throw std::invalid_argument("homogeneity_test: h is not in h0");
    if (h.is_zero())
        return false;

    bool found = false;
    auto u = weight2_space(h);
    if (!u.empty()) {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> num(-opt.height, opt.height);
        std::uniform_int_distribution<int> den(1, opt.height);
        for (int trial = 0; trial < opt.trials && !found; ++trial) {
            std::vector<Q> c(u.size());
            for (auto& q : c) {
                q = Q(num(rng), den(rng));
                q.canonicalize();
            }
            TensorElement e = combine_tensors(c, u);
            if (!e.is_zero() && complete_with_h(h, sigma(e)))
                found = true;
        }
    }

    if (opt.crosscheck) {
        bool expected = carrier_classes().count({alpha_label(h), gamma_label(h)}) > 0;
        if (expected != found) {
            std::ostringstream os;
            os << "inconsistency: sampling says " << (found ? "homogeneous" : "not homogeneous") << " for gamma "
               << label_string(gamma_label(h)) << ", the carrier route disagrees";
            throw std::logic_error(os.str());
        }
    }
    return found;
}

CharacteristicSet complex_characteristics(const HomogeneityOptions& opt)
{
    std::set<Label> alphas;
    for (const auto& [a, g] : carrier_classes())
        alphas.insert(a);

    CharacteristicSet cs;
    std::set<std::array<int, 4>> seen_h, seen_w0;
    for (const auto& a : alphas) {
        TorusPoint hat = characteristic_from_alpha(a);
        for (const auto& w : weyl_W()) {
            TorusPoint y;
            for (int i = 0; i < 4; ++i)
                y[i] = w.sign[i] * hat[w.perm[i]];
            if (!seen_h.insert(to_key(y)).second)
                continue;
            cs.H.push_back(y);
            TorusPoint d = w0_dominant(y);
            if (seen_w0.insert(to_key(d)).second) {
                cs.Hprime.push_back(d);
                cs.alpha.push_back(a);
            }
        }
    }

    const int n = static_cast<int>(cs.Hprime.size());
    std::vector<char> flags(n);
    std::string error;
    std::mutex mu;
    carrier_classes();
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            flags[i] = homogeneity_test(torus_element(cs.Hprime[i]), opt);
        } catch (const std::exception& ex) {
            std::lock_guard<std::mutex> lock(mu);
            if (error.empty())
                error = ex.what();
        }
    }
    if (!error.empty())
        throw std::logic_error(error);
    cs.homogeneous_flags.assign(flags.begin(), flags.end());
    return cs;
}

std::vector<TensorElement> weight_space(const LieElement& h, int k)
{
    QMatrix m = action_on_g1(h);
    for (int i = 0; i < 16; ++i)
        m(i, i) -= k;
    std::vector<TensorElement> out;
    for (const auto& v : nullspace(m)) {
        TensorElement e;
        for (int t = 0; t < 16; ++t)
            e[t] = v[t];
        out.push_back(e);
    }
    return out;
}

std::vector<TensorElement> weight2_space(const LieElement& h) { return weight_space(h, 2); }

PolyIdeal cayley_equations(const LieElement& h)
{
    auto u = weight2_space(h);
    const int d = static_cast<int>(u.size());
    PolyIdeal ideal;
    for (int i = 0; i < d; ++i)
        ideal.names.push_back("T" + std::to_string(i + 1));

    std::vector<QMatrix> x(d);
    for (int i = 0; i < d; ++i)
        x[i] = scale(sigma(u[i]), kCayleyScale);
    // [X, X^T] = sum_{i,j} Ti Tj [Xi, Xj^T]
    std::vector<MultiPoly> entries(64, MultiPoly(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            QMatrix b = bracket(x[i], x[j].transpose());
            Monomial m(d, 0);
            ++m[i];
            ++m[j];
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c)
                    if (sgn(b(r, c)) != 0)
                        entries[8 * r + c].add_term(m, b(r, c));
        }
    std::vector<MultiPoly> seen;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            MultiPoly p = entries[8 * r + c];
            if (sgn(h(r, c)) != 0)
                p.add_term(Monomial(d, 0), -h(r, c));
            if (p.is_zero())
                continue;
            MultiPoly key = p.monic();
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                continue;
            seen.push_back(key);
            ideal.generators.push_back(p);
        }
    return ideal;
}

std::optional<std::vector<Q>> weight2_coords(const LieElement& h, const TensorElement& e)
{
    auto u = weight2_space(h);
    QMatrix a(16, static_cast<int>(u.size()));
    std::vector<Q> b(16);
    for (int t = 0; t < 16; ++t) {
        for (size_t i = 0; i < u.size(); ++i)
            a(t, static_cast<int>(i)) = u[i][t];
        b[t] = e[t];
    }
    return solve(a, b);
}

bool satisfies_cayley(const LieElement& h, const TensorElement& e)
{
    QMatrix x = scale(sigma(e), kCayleyScale);
    return bracket(h, x) == scale(x, 2) && bracket(x, x.transpose()) == h;
}

std::vector<ReducedSolution> centralizer_reduce(const LieElement& h, const std::vector<TensorElement>& solutions)
{
    auto a = g0_factor_matrices(h);
    std::vector<ReducedSolution> out;
    for (const auto& s : solutions) {
        ReducedSolution r;
        r.element = s;
        r.g = GroupElement4::identity();
        for (int k = 0; k < 4; ++k) {
            if (!a[k].is_zero())
                continue;
            const int bit = 1 << (3 - k);
            for (int t = 0; t < 16; ++t) {
                if (t & bit)
                    continue;
                const Q m0 = r.element[t], m1 = r.element[t | bit];
                if (sgn(m0) == 0 || sgn(m1) == 0)
                    continue;
                auto n = rational_sqrt(m0 * m0 + m1 * m1);
                if (!n) {
                    r.unreduced = true;
                    r.moves.push_back("factor " + std::to_string(k + 1) + ": no rational circle point clears " + tuple_string(t));
                    break;
                }
                Q c = m1 / *n, sn = -m0 / *n;
                GroupElement4 g = GroupElement4::identity();
                g.g[k] = mat2(c, sn, -sn, c);
                r.element = act(g, r.element);
                r.g = g * r.g;
                r.moves.push_back("factor " + std::to_string(k + 1) + ": rotation (cos, sin) = (" + to_string(c) + ", " +
                                  to_string(sn) + ") clears " + tuple_string(t));
                break;
            }
        }
        for (int t = 0; t < 16; ++t) {
            if (sgn(r.element[t]) == 0)
                continue;
            if (sgn(r.element[t]) < 0) {
                GroupElement4 g = GroupElement4::identity();
                g.g[0] = mat2(-1, 0, 0, -1);
                r.element = act(g, r.element);
                r.g = g * r.g;
                r.moves.push_back("overall sign");
            }
            break;
        }
        out.push_back(std::move(r));
    }
    return out;
}

CayleySolutions solve_cayley(const LieElement& h, size_t max_points, const GroebnerBudget& budget)
{
    CayleySolutions out;
    PolyIdeal ideal = cayley_equations(h);
    if (!buchberger(ideal, budget))
        return out;
    out.complete = true;
    auto u = weight2_space(h);
    for (const auto& p : rational_points(*ideal.basis, static_cast<int>(u.size()), max_points)) {
        TensorElement e = combine_tensors(p, u);
        if (!e.is_zero() && satisfies_cayley(h, e))
            out.points.push_back(e);
    }
    out.reduced = centralizer_reduce(h, out.points);

    std::vector<TensorElement> reps;
    for (const auto& r : out.reduced)
        if (std::find(reps.begin(), reps.end(), r.element) == reps.end())
            reps.push_back(r.element);
    std::sort(reps.begin(), reps.end());
    for (const auto& e : reps) {
        OrbitRecord rec = fingerprint(e);
        bool fresh = true;
        for (const auto& c : out.classes) {
            if (c.key() != rec.key())
                continue;
            auto v = decide_conjugacy(c.rep, e);
            if (v.kind == ConjugacyVerdict::Kind::Conjugate) {
                fresh = false;
                break;
            }
            if (v.kind == ConjugacyVerdict::Kind::Unknown)
                ++out.unknown_pairs;
        }
        if (fresh)
            out.classes.push_back(rec);
    }
    return out;
}

CharacteristicOrbits real_orbits_at(const TorusPoint& x, const RealRouteOptions& opt)
{
    CharacteristicOrbits out;
    out.h = x;
    LieElement h = torus_element(x);
    out.alpha = alpha_label(h);
    out.gamma = gamma_label(h);
    auto u = weight2_space(h);
    const int d = static_cast<int>(u.size());

    std::vector<OrbitRecord> records;
    std::map<std::tuple<Label, Label, Label, Fingerprint>, int> per_key;
    for (int size = 1; size <= std::min(opt.support_bound, d); ++size)
        for (int mask = 0; mask < (1 << d); ++mask) {
            if (__builtin_popcount(mask) != size)
                continue;
            for (int signs = 0; signs < (1 << (size - 1)); ++signs) {
                TensorElement e;
                int j = 0;
                for (int i = 0; i < d; ++i) {
                    if (!(mask >> i & 1))
                        continue;
                    bool neg = j > 0 && (signs >> (j - 1) & 1);
                    e = e + u[i] * Q(neg ? -1 : 1);
                    ++j;
                }
                ++out.points;
                if (!complete_with_h(h, sigma(e)))
                    continue;
                ++out.open_points;
                OrbitRecord r = fingerprint(e);
                if (per_key[{r.alpha, r.gamma, r.beta, r.signatures}]++ < opt.per_key)
                    records.push_back(std::move(r));
            }
        }
    ClassSplit split = split_classes(records, opt.decide);
    out.classes = std::move(split.classes);
    out.unknown_pairs = split.unknown_pairs;
    return out;
}

std::vector<CharacteristicOrbits> real_orbits_by_characteristic(const CharacteristicSet& cs, const RealRouteOptions& opt)
{
    std::vector<TorusPoint> hs;
    for (size_t i = 0; i < cs.Hprime.size(); ++i)
        if (cs.homogeneous_flags[i])
            hs.push_back(cs.Hprime[i]);
    std::vector<CharacteristicOrbits> out(hs.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(hs.size()); ++i)
        out[i] = real_orbits_at(hs[i], opt);
    return out;
}

std::vector<OrbitRecord> collect_classes(const std::vector<CharacteristicOrbits>& per_h)
{
    std::vector<OrbitRecord> all;
    for (const auto& c : per_h)
        all.insert(all.end(), c.classes.begin(), c.classes.end());
    return assign_delta(std::move(all));
}

}  // namespace atlas
