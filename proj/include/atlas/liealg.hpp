#pragma once

#include "atlas/scalar.hpp"

#include <array>
#include <optional>
#include <vector>

namespace atlas {

// Elements of so(4,4) are real 8x8 matrices X with X^T M = -M X.
using LieElement = QMatrix;

// 8x8 over Q(i), used for Cayley transforms.
class GMatrix {
public:
    GMatrix() : a_(64) {}
    explicit GMatrix(const QMatrix& real);
    Gauss& operator()(int i, int j) { return a_[i * 8 + j]; }
    const Gauss& operator()(int i, int j) const { return a_[i * 8 + j]; }
    GMatrix operator*(const GMatrix& o) const;
    GMatrix operator+(const GMatrix& o) const;
    GMatrix operator-(const GMatrix& o) const;
    GMatrix scaled(const Gauss& c) const;
    GMatrix transpose() const;
    bool operator==(const GMatrix& o) const { return a_ == o.a_; }
    bool is_zero() const;
    bool is_real() const;
    QMatrix real_part() const;
    QMatrix imag_part() const;

private:
    std::vector<Gauss> a_;
};

GMatrix bracket(const GMatrix& x, const GMatrix& y);

struct AlgebraModel {
    QMatrix M;
    QMatrix D;
    // index 1..4 canonical generators, index 0 the extra g0 triple
    std::array<QMatrix, 5> h, e, f;
    std::vector<QMatrix> basis;  // 28
    std::vector<QMatrix> g0;     // 12, spanned by the four factor triples
    std::vector<QMatrix> g1;     // 16
    std::vector<QMatrix> k;      // 12
    std::vector<QMatrix> p;      // 16

    QMatrix theta(const QMatrix& x) const;
    QMatrix phi(const QMatrix& x) const;
    bool in_g(const QMatrix& x) const;
};

const AlgebraModel& model();
AlgebraModel build_model();

QMatrix zero8();
QMatrix unit8(int i, int j);  // 1-based matrix unit e_ij
QMatrix bracket(const QMatrix& x, const QMatrix& y);
QMatrix scale(const QMatrix& x, const Q& c);
std::vector<Q> flatten(const QMatrix& x);

// Coordinates of x in the span of basis; nullopt if x is outside it.
std::optional<std::vector<Q>> coords(const QMatrix& x, const std::vector<QMatrix>& basis);
QMatrix combine(const std::vector<Q>& c, const std::vector<QMatrix>& basis);
int span_dim(const std::vector<QMatrix>& mats);
bool in_span(const QMatrix& x, const std::vector<QMatrix>& basis);
std::vector<QMatrix> span_basis(const std::vector<QMatrix>& mats);

struct Decomposition {
    QMatrix g0, g1, k, p;
};
Decomposition decompose(const QMatrix& x);

bool is_nilpotent(const QMatrix& x);

// {y in span(space) : [y, s_i] = 0 for all i}
std::vector<QMatrix> centralizer(const std::vector<QMatrix>& space, const std::vector<QMatrix>& s);
// dimension of the g0-orbit of x in g1: 12 - dim z_{g0}(x)
int orbit_dim(const QMatrix& x);

struct Sl2Triple {
    QMatrix h, e, f;
    bool homogeneous = false;
    bool cayley = false;
};

bool is_sl2_triple(const QMatrix& h, const QMatrix& e, const QMatrix& f);
// Throws std::invalid_argument if e is zero, outside g1, or not nilpotent.
Sl2Triple complete_to_sl2(const QMatrix& e);
// Completion with h prescribed; nullopt if no f in g1 closes the triple.
std::optional<Sl2Triple> complete_with_h(const QMatrix& h, const QMatrix& e);
// theta(e) = -f plus the sl2 relations; homogeneity (h in g0, e, f in g1) unless disabled
bool verify_cayley(const Sl2Triple& t, bool require_homogeneous = true);

bool is_subalgebra(const std::vector<QMatrix>& basis);
// Throws std::invalid_argument unless span(l) is theta-stable.
int real_rank(const std::vector<QMatrix>& l);

}  // namespace atlas
