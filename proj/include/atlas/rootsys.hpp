#pragma once

#include "atlas/liealg.hpp"

#include <array>
#include <string>
#include <vector>

namespace atlas {

// A root as its coefficient vector over the simple roots alpha1..alpha4.
using RootC = std::array<int, 4>;
// A weight in epsilon coordinates.
using Eps = std::array<int, 4>;

Eps to_eps(const RootC& c);
RootC from_eps(const Eps& v);
int inner(const RootC& a, const RootC& b);
RootC negate(const RootC& a);
RootC reflect(const RootC& b, const RootC& a);  // s_a(b)
bool is_root(const RootC& c);
bool in_phi1(const RootC& c);  // root space lies in g1
std::string root_name(const RootC& c);

struct RootSystem {
    std::vector<RootC> all;   // 24, sorted
    std::vector<RootC> phi0;  // 8
    std::vector<RootC> phi1;  // 16
    std::array<RootC, 4> simple;
    RootC alpha0;
    std::array<std::array<int, 4>, 4> cartan;
};

const RootSystem& roots();

// Weyl group elements act on epsilon coordinates as signed permutations:
// (w v)_i = sign[i] * v[perm[i]].
struct WeylElement {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> sign{1, 1, 1, 1};

    Eps apply_eps(const Eps& v) const;
    RootC apply_root(const RootC& c) const;
    WeylElement compose(const WeylElement& o) const;  // (this * o)(v) = this(o(v))
    bool operator==(const WeylElement&) const = default;
    auto operator<=>(const WeylElement&) const = default;
};

WeylElement reflection(const RootC& a);
std::vector<WeylElement> weyl_group(const std::vector<RootC>& generators);
const std::vector<WeylElement>& weyl_W();
const std::vector<WeylElement>& weyl_W0();

enum class FactorKind { split, compact };
// Factor order: alpha1, alpha0, alpha4, alpha3 (the four sl2 factors of g0).
std::vector<WeylElement> real_weyl(const std::array<FactorKind, 4>& kinds);

// Root vector x_c in the matrix model (fixed normalization).
const QMatrix& root_vector(const RootC& c);
// Coroot h_c with [h_c, x_c] = 2 x_c.
QMatrix coroot(const RootC& c);

// Torus h0 = span(d_1..d_4); h = sum x_i d_i.
QMatrix torus_element(const std::array<Q, 4>& x);
std::optional<std::array<Q, 4>> torus_coords(const QMatrix& h);
Q root_value(const RootC& c, const std::array<Q, 4>& x);

// The four factor sl2-triples (H_k, E_k, F_k) of g0, in factor order.
struct FactorTriple {
    QMatrix H, E, F;
};
const std::array<FactorTriple, 4>& factor_triples();

using Label = std::array<int, 4>;
std::string label_string(const Label& l);

Label alpha_label(const QMatrix& h);
Label alpha_label_torus(const std::array<Q, 4>& x);  // via W-dominance
Label gamma_label(const QMatrix& h);
Label gamma_label_torus(const std::array<Q, 4>& x);  // via W0-dominance

struct CayleyImage {
    GMatrix h, e, f;
};
// h' = i(e - f), e' = (-ie - if + h)/2, f' = (ie + if + h)/2
CayleyImage cayley_transform(const Sl2Triple& t);

// Positive-definite S with S M S = M, e^T S = S f, h^T S = S h.
QMatrix cayley_form(const Sl2Triple& t);
Label beta_label(const Sl2Triple& t);
// Requires a real Cayley triple; evaluates via the explicit Cayley transform.
Label beta_label_cayley(const Sl2Triple& t);

}  // namespace atlas
