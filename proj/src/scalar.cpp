#include "atlas/scalar.hpp"

#include <stdexcept>

namespace atlas {

Q make_q(long num, long den)
{
    Q q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::optional<Q> rational_sqrt(const Q& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class sn = sqrt(n), sd = sqrt(d);
    Q r(sn, sd);
    r.canonicalize();
    return r;
}

Gauss Gauss::operator/(const Gauss& o) const
{
    Q n = o.norm();
    if (sgn(n) == 0)
        throw std::domain_error("division by zero in Q(i)");
    Gauss p = *this * o.conj();
    return Gauss(p.re / n, p.im / n);
}

std::string to_string(const Gauss& z)
{
    if (z.is_real())
        return z.re.get_str();
    if (sgn(z.re) == 0)
        return z.im.get_str() + "i";
    return "(" + z.re.get_str() + (sgn(z.im) > 0 ? "+" : "") + z.im.get_str() + "i)";
}

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Q>>& rows)
{
    if (rows.empty())
        return {};
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    if (c_ != o.r_)
        throw std::invalid_argument("matrix shape mismatch");
    QMatrix p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& x = (*this)(i, k);
            if (sgn(x) == 0)
                continue;
            for (int j = 0; j < o.c_; ++j)
                if (sgn(o(k, j)) != 0)
                    p(i, j) += x * o(k, j);
        }
    return p;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
    QMatrix p = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        p.a_[i] += o.a_[i];
    return p;
}

QMatrix QMatrix::operator-(const QMatrix& o) const
{
    QMatrix p = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        p.a_[i] -= o.a_[i];
    return p;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool QMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (sgn(x) != 0)
            return false;
    return true;
}

bool QMatrix::is_symmetric() const
{
    if (r_ != c_)
        return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

std::vector<Q> QMatrix::row(int i) const
{
    return std::vector<Q>(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

void QMatrix::append_row(const std::vector<Q>& row)
{
    if (r_ == 0 && c_ == 0)
        c_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != c_)
        throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++r_;
}

Rref rref(QMatrix m)
{
    Rref out;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (sgn(m(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                swap(m(p, j), m(r, j));
        Q inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            Q f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0)
                    m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    QMatrix t(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j)
            t(i, j) = m(i, j);
    out.m = std::move(t);
    return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<Q>> nullspace(const QMatrix& m)
{
    Rref R = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (int p : R.pivots)
        is_piv[p] = true;
    std::vector<std::vector<Q>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        std::vector<Q> v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < R.pivots.size(); ++i)
            v[R.pivots[i]] = -R.m(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Q>> solve(const QMatrix& a, const std::vector<Q>& b)
{
    int n = a.cols();
    QMatrix aug(a.rows(), n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    Rref R = rref(aug);
    std::vector<Q> x(n);
    for (size_t i = 0; i < R.pivots.size(); ++i) {
        if (R.pivots[i] == n)
            return std::nullopt;
        x[R.pivots[i]] = R.m(static_cast<int>(i), n);
    }
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& m)
{
    int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref R = rref(aug);
    if (static_cast<int>(R.pivots.size()) < n || R.pivots[n - 1] >= n)
        return std::nullopt;
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = R.m(i, n + j);
    return inv;
}

Q determinant(QMatrix m)
{
    int n = m.rows();
    Q det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (sgn(m(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j)
                swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0)
                continue;
            Q f = m(i, c) / m(c, c);
            for (int j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::vector<Q> charpoly(const QMatrix& m)
{
    // Faddeev-LeVerrier
    int n = m.rows();
    std::vector<Q> c(n + 1);
    c[0] = 1;
    QMatrix mk(n, n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        for (int i = 0; i < n; ++i)
            mk(i, i) += c[k - 1];
        QMatrix am = m * mk;
        Q tr = 0;
        for (int i = 0; i < n; ++i)
            tr += am(i, i);
        c[k] = -tr / k;
    }
    return c;
}

Q pfaffian(const QMatrix& a)
{
    int n = a.rows();
    if (n == 0)
        return 1;
    if (n % 2)
        return 0;
    Q s = 0;
    for (int j = 1; j < n; ++j) {
        if (sgn(a(0, j)) == 0)
            continue;
        std::vector<int> idx;
        for (int k = 1; k < n; ++k)
            if (k != j)
                idx.push_back(k);
        QMatrix sub(n - 2, n - 2);
        for (int r = 0; r < n - 2; ++r)
            for (int c = 0; c < n - 2; ++c)
                sub(r, c) = a(idx[r], idx[c]);
        Q term = a(0, j) * pfaffian(sub);
        if (j % 2 == 1)
            s += term;
        else
            s -= term;
    }
    return s;
}

std::optional<std::vector<long>> integer_roots(const std::vector<Q>& coeffs)
{
    std::vector<Q> cs = coeffs;
    std::vector<long> roots;
    while (cs.size() > 1) {
        // constant term zero gives root 0; otherwise roots divide it
        if (sgn(cs.back()) == 0) {
            roots.push_back(0);
            cs.pop_back();
            continue;
        }
        if (cs.back().get_den() != 1)
            return std::nullopt;
        mpz_class c0 = abs(cs.back().get_num());
        bool found = false;
        for (long d = 1; !found && mpz_cmp_si(c0.get_mpz_t(), d) >= 0; ++d) {
            if (mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(d)) == 0)
                continue;
            for (long r : {d, -d}) {
                Q v = 0;
                for (const Q& c : cs)
                    v = v * r + c;
                if (sgn(v) == 0) {
                    std::vector<Q> nc{cs[0]};
                    for (size_t i = 1; i + 1 < cs.size(); ++i)
                        nc.push_back(cs[i] + nc.back() * r);
                    cs = nc;
                    roots.push_back(r);
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            return std::nullopt;
    }
    return roots;
}

std::string to_string(const Signature& s)
{
    return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

Signature symmetric_signature(const QMatrix& m)
{
    if (!m.is_symmetric())
        throw std::invalid_argument("symmetric_signature: matrix is not symmetric");
    int n = m.rows();
    QMatrix a = m;
    Signature s;
    std::vector<bool> done(n, false);
    for (;;) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && sgn(a(i, i)) != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            // all remaining diagonal entries vanish: fold an off-diagonal pair into the diagonal
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && sgn(a(i, j)) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0)
                break;
            for (int k = 0; k < n; ++k)
                a(pi, k) += a(pj, k);
            for (int k = 0; k < n; ++k)
                a(k, pi) += a(k, pj);
            continue;
        }
        if (sgn(a(p, p)) > 0)
            ++s.plus;
        else
            ++s.minus;
        done[p] = true;
        for (int i = 0; i < n; ++i) {
            if (done[i] || sgn(a(i, p)) == 0)
                continue;
            Q f = a(i, p) / a(p, p);
            for (int k = 0; k < n; ++k)
                a(i, k) -= f * a(p, k);
        }
        for (int i = 0; i < n; ++i)
            if (!done[i]) {
                a(p, i) = 0;
                a(i, p) = 0;
            }
    }
    return s;
}

MultiPoly MultiPoly::constant(int nvars, const Q& c)
{
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i)
{
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

bool MultiPoly::is_constant() const
{
    if (t_.empty())
        return true;
    if (t_.size() > 1)
        return false;
    for (int e : t_.begin()->first)
        if (e)
            return false;
    return true;
}

int MultiPoly::total_degree() const
{
    int d = 0;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (int e : m)
            s += e;
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Q& c)
{
    if (sgn(c) == 0)
        return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0)
        t_.erase(it);
}

void MultiPoly::check(const MultiPoly& o) const
{
    if (n_ != o.n_)
        throw std::invalid_argument("MultiPoly: variable list mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    check(o);
    MultiPoly p = *this;
    for (const auto& [m, c] : o.t_)
        p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const
{
    check(o);
    MultiPoly p = *this;
    for (const auto& [m, c] : o.t_)
        p.add_term(m, -c);
    return p;
}

MultiPoly MultiPoly::operator-() const { return *this * Q(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    check(o);
    MultiPoly p(n_);
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            Monomial m(n_);
            for (int i = 0; i < n_; ++i)
                m[i] = m1[i] + m2[i];
            p.add_term(m, c1 * c2);
        }
    return p;
}

MultiPoly MultiPoly::operator*(const Q& c) const
{
    MultiPoly p(n_);
    if (sgn(c) == 0)
        return p;
    for (const auto& [m, x] : t_)
        p.t_.emplace(m, x * c);
    return p;
}

MultiPoly MultiPoly::mul_term(const Monomial& mono, const Q& c) const
{
    MultiPoly p(n_);
    for (const auto& [m, x] : t_) {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i)
            r[i] = m[i] + mono[i];
        p.t_.emplace(std::move(r), x * c);
    }
    return p;
}

MultiPoly MultiPoly::monic() const
{
    if (t_.empty())
        return *this;
    return *this * (1 / lead_coeff());
}

Q MultiPoly::eval(const std::vector<Q>& x) const
{
    Q s = 0;
    for (const auto& [m, c] : t_) {
        Q t = c;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < m[i]; ++k)
                t *= x[i];
        s += t;
    }
    return s;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const
{
    if (t_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Q a = abs(c);
        bool unit = a == 1;
        bool is_const = true;
        for (int e : m)
            if (e)
                is_const = false;
        if (first)
            s += sgn(c) < 0 ? "-" : "";
        else
            s += sgn(c) < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (!m[i])
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[i];
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (is_const)
            s += a.get_str();
        else if (unit)
            s += mono;
        else
            s += a.get_str() + "*" + mono;
    }
    return s;
}

}  // namespace atlas
