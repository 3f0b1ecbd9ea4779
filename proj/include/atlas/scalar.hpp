#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

using Q = mpq_class;

Q make_q(long num, long den = 1);
std::string to_string(const Q& q);
std::optional<Q> rational_sqrt(const Q& q);

struct Gauss {
    Q re, im;

    Gauss() = default;
    Gauss(Q r, Q i = 0) : re(std::move(r)), im(std::move(i)) {}
    static Gauss i() { return Gauss(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    Gauss conj() const { return Gauss(re, -im); }
    Q norm() const { return re * re + im * im; }

    Gauss operator+(const Gauss& o) const { return Gauss(re + o.re, im + o.im); }
    Gauss operator-(const Gauss& o) const { return Gauss(re - o.re, im - o.im); }
    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss operator*(const Gauss& o) const { return Gauss(re * o.re - im * o.im, re * o.im + im * o.re); }
    Gauss operator/(const Gauss& o) const;
    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
};

std::string to_string(const Gauss& z);

// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Q>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix transpose() const;
    bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;
    bool is_symmetric() const;
    std::vector<Q> row(int i) const;
    void append_row(const std::vector<Q>& row);

private:
    int r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

struct Rref {
    QMatrix m;
    std::vector<int> pivots;
};

Rref rref(QMatrix m);
int rank(const QMatrix& m);
// Basis of {x : m x = 0}.
std::vector<std::vector<Q>> nullspace(const QMatrix& m);
// A particular solution of A x = b, if any.
std::optional<std::vector<Q>> solve(const QMatrix& a, const std::vector<Q>& b);
std::optional<QMatrix> inverse(const QMatrix& m);
Q determinant(QMatrix m);
// Coefficients c0..cn of det(tI - m), with c0 = 1.
std::vector<Q> charpoly(const QMatrix& m);
Q pfaffian(const QMatrix& m);
// Integer roots of a monic integer-rooted polynomial, with multiplicity; nullopt if it does not split over Z.
std::optional<std::vector<long>> integer_roots(const std::vector<Q>& coeffs);

struct Signature {
    int plus = 0;
    int minus = 0;
    auto operator<=>(const Signature&) const = default;
};

std::string to_string(const Signature& s);
Signature symmetric_signature(const QMatrix& m);

// Multivariate polynomials over Q, pure lex with variable 0 largest.
using Monomial = std::vector<int>;

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class MultiPoly {
public:
    using Terms = std::map<Monomial, Q, LexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : n_(nvars) {}
    static MultiPoly constant(int nvars, const Q& c);
    static MultiPoly var(int nvars, int i);

    int nvars() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    const Monomial& lead_monomial() const { return t_.begin()->first; }
    const Q& lead_coeff() const { return t_.begin()->second; }
    int total_degree() const;

    void add_term(const Monomial& m, const Q& c);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Q& c) const;
    MultiPoly mul_term(const Monomial& m, const Q& c) const;
    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && t_ == o.t_; }
    MultiPoly monic() const;
    Q eval(const std::vector<Q>& x) const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check(const MultiPoly& o) const;
    int n_ = 0;
    Terms t_;
};

}  // namespace atlas
