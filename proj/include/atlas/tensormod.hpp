#pragma once

#include "atlas/liealg.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

// Sign tuple (s1..s4), encoded as 4 bits with bit (3-k) set when s_{k+1} = '-'.
// Index order 0..15 is lexicographic with + < -.
using SignTuple = int;

SignTuple tuple_from_string(std::string_view s);  // "++--"
std::string tuple_string(SignTuple t);
// component index (0 for '+', 1 for '-') of factor k = 0..3
inline int tuple_bit(SignTuple t, int k) { return (t >> (3 - k)) & 1; }
inline int tuple_sign(SignTuple t, int k) { return tuple_bit(t, k) ? -1 : 1; }

class TensorElement {
public:
    TensorElement() = default;
    static TensorElement basis(SignTuple t, const Q& c = 1);

    Q& operator[](SignTuple t) { return c_[t]; }
    const Q& operator[](SignTuple t) const { return c_[t]; }
    // coefficient at multi-index (i1..i4), i_k in {0,1}
    const Q& at(int i1, int i2, int i3, int i4) const { return c_[(i1 << 3) | (i2 << 2) | (i3 << 1) | i4]; }

    bool is_zero() const;
    int support_size() const;
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const Q& s) const;
    bool operator==(const TensorElement& o) const { return c_ == o.c_; }
    bool operator<(const TensorElement& o) const;

private:
    std::array<Q, 16> c_;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TensorElement parse_sign_expr(std::string_view s);
std::string to_string(const TensorElement& v);

// Element of SL2(Q)^4; g[k] acts on factor k, g[k](new, old).
struct GroupElement4 {
    std::array<QMatrix, 4> g;

    static GroupElement4 identity();
    bool unimodular() const;
    GroupElement4 inverse() const;
    GroupElement4 operator*(const GroupElement4& o) const;
    bool operator==(const GroupElement4& o) const { return g == o.g; }
};

std::string to_string(const GroupElement4& g);
QMatrix mat2(const Q& a, const Q& b, const Q& c, const Q& d);

TensorElement act(const GroupElement4& g, const TensorElement& v);

// sigma: V2^{x4} -> g1
const std::array<QMatrix, 16>& sigma_basis();
QMatrix sigma(const TensorElement& v);
TensorElement sigma_inverse(const QMatrix& x);

// Infinitesimal action: sum over k of a[k] acting in factor k.
TensorElement derive(const std::array<QMatrix, 4>& a, const TensorElement& v);
// The traceless 2x2 matrices a[k] with [x, sigma(v)] = sigma(derive(a, v)).
// Throws std::invalid_argument unless x lies in g0.
std::array<QMatrix, 4> g0_factor_matrices(const QMatrix& x);

// R(g) on g1, computed through sigma.
QMatrix lift_to_g0_action(const GroupElement4& g, const QMatrix& x);
// R(g) on g1, computed without sigma: each factor of g is split into
// unipotent and diagonal pieces acting by exp(ad) and ad-H weights.
QMatrix adjoint_action(const GroupElement4& g, const QMatrix& x);
// exp(t ad u) x for ad-nilpotent u
QMatrix exp_ad(const QMatrix& u, const Q& t, const QMatrix& x);

}  // namespace atlas
