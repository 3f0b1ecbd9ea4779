#include "atlas/liealg.hpp"

#include <stdexcept>

namespace atlas {

GMatrix::GMatrix(const QMatrix& real) : a_(64)
{
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            a_[i * 8 + j] = Gauss(real(i, j));
}

GMatrix GMatrix::operator*(const GMatrix& o) const
{
    GMatrix p;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const Gauss& x = (*this)(i, k);
            if (x.is_zero())
                continue;
            for (int j = 0; j < 8; ++j)
                if (!o(k, j).is_zero())
                    p(i, j) += x * o(k, j);
        }
    return p;
}

GMatrix GMatrix::operator+(const GMatrix& o) const
{
    GMatrix p = *this;
    for (int i = 0; i < 64; ++i)
        p.a_[i] += o.a_[i];
    return p;
}

GMatrix GMatrix::operator-(const GMatrix& o) const
{
    GMatrix p = *this;
    for (int i = 0; i < 64; ++i)
        p.a_[i] -= o.a_[i];
    return p;
}

GMatrix GMatrix::scaled(const Gauss& c) const
{
    GMatrix p = *this;
    for (auto& x : p.a_)
        x *= c;
    return p;
}

GMatrix GMatrix::transpose() const
{
    GMatrix t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool GMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

bool GMatrix::is_real() const
{
    for (const auto& x : a_)
        if (!x.is_real())
            return false;
    return true;
}

QMatrix GMatrix::real_part() const
{
    QMatrix r(8, 8);
    for (int i = 0; i < 64; ++i)
        r(i / 8, i % 8) = a_[i].re;
    return r;
}

QMatrix GMatrix::imag_part() const
{
    QMatrix r(8, 8);
    for (int i = 0; i < 64; ++i)
        r(i / 8, i % 8) = a_[i].im;
    return r;
}

GMatrix bracket(const GMatrix& x, const GMatrix& y) { return x * y - y * x; }

QMatrix zero8() { return QMatrix(8, 8); }

QMatrix unit8(int i, int j)
{
    QMatrix m(8, 8);
    m(i - 1, j - 1) = 1;
    return m;
}

QMatrix bracket(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

QMatrix scale(const QMatrix& x, const Q& c)
{
    QMatrix r = x;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r(i, j) *= c;
    return r;
}

std::vector<Q> flatten(const QMatrix& x)
{
    std::vector<Q> v;
    v.reserve(static_cast<size_t>(x.rows()) * x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            v.push_back(x(i, j));
    return v;
}

static QMatrix columns_of(const std::vector<QMatrix>& basis)
{
    int n = static_cast<int>(basis.size());
    QMatrix a(64, n);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                a(r * 8 + c, j) = basis[j](r, c);
    return a;
}

std::optional<std::vector<Q>> coords(const QMatrix& x, const std::vector<QMatrix>& basis)
{
    if (basis.empty())
        return x.is_zero() ? std::optional<std::vector<Q>>(std::vector<Q>{}) : std::nullopt;
    auto s = solve(columns_of(basis), flatten(x));
    return s;
}

QMatrix combine(const std::vector<Q>& c, const std::vector<QMatrix>& basis)
{
    QMatrix m = zero8();
    for (size_t i = 0; i < basis.size(); ++i)
        if (sgn(c[i]) != 0)
            m = m + scale(basis[i], c[i]);
    return m;
}

int span_dim(const std::vector<QMatrix>& mats)
{
    if (mats.empty())
        return 0;
    QMatrix a(0, 0);
    for (const auto& m : mats)
        a.append_row(flatten(m));
    return rank(a);
}

std::vector<QMatrix> span_basis(const std::vector<QMatrix>& mats)
{
    std::vector<QMatrix> out;
    if (mats.empty())
        return out;
    QMatrix a(0, 0);
    for (const auto& m : mats)
        a.append_row(flatten(m));
    Rref R = rref(a);
    for (int i = 0; i < R.m.rows(); ++i) {
        QMatrix m(8, 8);
        for (int k = 0; k < 64; ++k)
            m(k / 8, k % 8) = R.m(i, k);
        out.push_back(std::move(m));
    }
    return out;
}

bool in_span(const QMatrix& x, const std::vector<QMatrix>& basis) { return coords(x, basis).has_value(); }

QMatrix AlgebraModel::theta(const QMatrix& x) const { return scale(x.transpose(), -1); }

QMatrix AlgebraModel::phi(const QMatrix& x) const { return D * x * D; }

bool AlgebraModel::in_g(const QMatrix& x) const { return (x.transpose() * M + M * x).is_zero(); }

static std::vector<QMatrix> eigenspace(const std::vector<QMatrix>& space, auto op, int lambda)
{
    int n = static_cast<int>(space.size());
    QMatrix a(64, n);
    for (int j = 0; j < n; ++j) {
        QMatrix img = op(space[j]) - scale(space[j], lambda);
        for (int k = 0; k < 64; ++k)
            a(k, j) = img(k / 8, k % 8);
    }
    std::vector<QMatrix> out;
    for (const auto& v : nullspace(a))
        out.push_back(combine(v, space));
    return out;
}

AlgebraModel build_model()
{
    AlgebraModel m;
    m.M = QMatrix(8, 8);
    for (int i = 0; i < 4; ++i) {
        m.M(i, 4 + i) = 1;
        m.M(4 + i, i) = 1;
    }
    m.D = QMatrix(8, 8);
    const int dsig[8] = {1, 1, -1, -1, 1, 1, -1, -1};
    for (int i = 0; i < 8; ++i)
        m.D(i, i) = dsig[i];

    auto d = [](int i) { return unit8(i, i) - unit8(4 + i, 4 + i); };
    m.h[1] = d(1) - d(2);
    m.h[2] = d(2) - d(3);
    m.h[3] = d(3) + d(4);
    m.h[4] = d(3) - d(4);
    m.h[0] = d(1) + d(2);
    m.e[1] = unit8(1, 2) - unit8(6, 5);
    m.e[2] = unit8(2, 3) - unit8(7, 6);
    m.e[3] = unit8(3, 8) - unit8(4, 7);
    m.e[4] = unit8(3, 4) - unit8(8, 7);
    m.e[0] = unit8(1, 6) - unit8(2, 5);
    for (int i = 0; i < 5; ++i)
        m.f[i] = m.e[i].transpose();

    // basis of g: kernel of X -> X^T M + M X
    QMatrix eq(64, 64);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                if (sgn(m.M(k, j)) != 0)
                    eq(i * 8 + j, k * 8 + i) += m.M(k, j);
                if (sgn(m.M(i, k)) != 0)
                    eq(i * 8 + j, k * 8 + j) += m.M(i, k);
            }
    for (const auto& v : nullspace(eq)) {
        QMatrix x(8, 8);
        for (int k = 0; k < 64; ++k)
            x(k / 8, k % 8) = v[k];
        m.basis.push_back(std::move(x));
    }
    for (int i : {1, 0, 4, 3})
        for (const auto* t : {&m.h, &m.e, &m.f})
            m.g0.push_back((*t)[i]);
    const AlgebraModel& cm = m;
    m.g1 = eigenspace(m.basis, [&](const QMatrix& x) { return cm.phi(x); }, -1);
    m.k = eigenspace(m.basis, [&](const QMatrix& x) { return cm.theta(x); }, 1);
    m.p = eigenspace(m.basis, [&](const QMatrix& x) { return cm.theta(x); }, -1);
    return m;
}

const AlgebraModel& model()
{
    static const AlgebraModel m = build_model();
    return m;
}

Decomposition decompose(const QMatrix& x)
{
    const auto& m = model();
    Q half(1, 2);
    QMatrix ph = m.phi(x), th = m.theta(x);
    return {scale(x + ph, half), scale(x - ph, half), scale(x + th, half), scale(x - th, half)};
}

bool is_nilpotent(const QMatrix& x)
{
    QMatrix p = x;
    for (int i = 0; i < 7; ++i)
        p = p * x;
    return p.is_zero();
}

std::vector<QMatrix> centralizer(const std::vector<QMatrix>& space, const std::vector<QMatrix>& s)
{
    int n = static_cast<int>(space.size());
    QMatrix a(0, 0);
    if (n == 0)
        return {};
    std::vector<QMatrix> brs;
    for (const auto& y : s) {
        std::vector<QMatrix> cols;
        for (const auto& b : space)
            cols.push_back(bracket(b, y));
        QMatrix blk = columns_of(cols);
        for (int r = 0; r < blk.rows(); ++r)
            a.append_row(blk.row(r));
    }
    if (a.rows() == 0)
        return space;
    std::vector<QMatrix> out;
    for (const auto& v : nullspace(a))
        out.push_back(combine(v, space));
    return out;
}

int orbit_dim(const QMatrix& x) { return 12 - static_cast<int>(centralizer(model().g0, {x}).size()); }

bool is_sl2_triple(const QMatrix& h, const QMatrix& e, const QMatrix& f)
{
    return bracket(h, e) == scale(e, 2) && bracket(h, f) == scale(f, -2) && bracket(e, f) == h;
}

// Solve L(y) = rhs for y in span(space), where L is linear; returns the
// lexicographically smallest solution in the sense of free coordinates = 0.
static std::optional<QMatrix> linear_solve(const std::vector<QMatrix>& space, auto L, const QMatrix& rhs)
{
    std::vector<QMatrix> imgs;
    for (const auto& b : space)
        imgs.push_back(L(b));
    auto s = solve(columns_of(imgs), flatten(rhs));
    if (!s)
        return std::nullopt;
    return combine(*s, space);
}

std::optional<Sl2Triple> complete_with_h(const QMatrix& h, const QMatrix& e)
{
    const auto& m = model();
    if (!(bracket(h, e) == scale(e, 2)))
        return std::nullopt;
    // f in g1 with [e,f] = h and [h,f] = -2f
    int n = static_cast<int>(m.g1.size());
    QMatrix a(128, n);
    std::vector<Q> rhs(128);
    for (int j = 0; j < n; ++j) {
        QMatrix x = bracket(e, m.g1[j]);
        QMatrix y = bracket(h, m.g1[j]) + scale(m.g1[j], 2);
        for (int k = 0; k < 64; ++k) {
            a(k, j) = x(k / 8, k % 8);
            a(64 + k, j) = y(k / 8, k % 8);
        }
    }
    for (int k = 0; k < 64; ++k)
        rhs[k] = h(k / 8, k % 8);
    auto s = solve(a, rhs);
    if (!s)
        return std::nullopt;
    Sl2Triple t{h, e, combine(*s, m.g1)};
    t.homogeneous = true;
    t.cayley = verify_cayley(t);
    return t;
}

Sl2Triple complete_to_sl2(const QMatrix& e)
{
    const auto& m = model();
    if (e.is_zero())
        throw std::invalid_argument("complete_to_sl2: e = 0");
    if (!in_span(e, m.g1))
        throw std::invalid_argument("complete_to_sl2: e not in g1");
    if (!is_nilpotent(e))
        throw std::invalid_argument("complete_to_sl2: e not nilpotent");
    auto f0 = linear_solve(m.g1, [&](const QMatrix& y) { return bracket(bracket(e, y), e); }, scale(e, 2));
    if (!f0)
        throw std::logic_error("complete_to_sl2: Jacobson-Morozov system unsolvable");
    QMatrix h = bracket(e, *f0);
    auto t = complete_with_h(h, e);
    if (!t)
        throw std::logic_error("complete_to_sl2: f not found");
    return *t;
}

bool verify_cayley(const Sl2Triple& t, bool require_homogeneous)
{
    const auto& m = model();
    if (!is_sl2_triple(t.h, t.e, t.f))
        return false;
    if (require_homogeneous && (!in_span(t.h, m.g0) || !in_span(t.e, m.g1) || !in_span(t.f, m.g1)))
        return false;
    return m.theta(t.e) == scale(t.f, -1);
}

bool is_subalgebra(const std::vector<QMatrix>& basis)
{
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!in_span(bracket(basis[i], basis[j]), basis))
                return false;
    return true;
}

int real_rank(const std::vector<QMatrix>& l)
{
    const auto& m = model();
    std::vector<QMatrix> lb = span_basis(l);
    for (const auto& x : lb)
        if (!in_span(m.theta(x), lb))
            throw std::invalid_argument("real_rank: subalgebra is not theta-stable");
    // l ∩ p is spanned by the p-parts of a theta-stable basis
    std::vector<QMatrix> lp;
    for (const auto& x : lb)
        lp.push_back(decompose(x).p);
    lp = span_basis(lp);
    std::vector<QMatrix> a;
    for (;;) {
        auto z = centralizer(lp, a);
        QMatrix pick;
        bool found = false;
        for (const auto& x : z)
            if (!in_span(x, a)) {
                pick = x;
                found = true;
                break;
            }
        if (!found)
            return static_cast<int>(a.size());
        a.push_back(pick);
    }
}

}  // namespace atlas
