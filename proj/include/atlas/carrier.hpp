#pragma once

#include "atlas/rootsys.hpp"
#include "atlas/scalar.hpp"
#include "atlas/tensormod.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct CarrierAlgebra {
    std::string name;
    std::string cartan = "split";   // real Cartan subalgebra the carrier is regular for
    std::vector<RootC> pi;          // simple system of Psi (empty for hand-built real forms)
    std::map<RootC, int> degree;    // Psi with its Z-grading, deg 1 on s1
    std::vector<QMatrix> s0, s1, sm1;
    bool realform = true;

    std::vector<QMatrix> basis() const;  // s0, s1, s-1
};

// Carrier built from a graded root subsystem over the split Cartan.
CarrierAlgebra carrier_from_degrees(const std::map<RootC, int>& degree, std::string name = "");

// One carrier per W0-class: graded pi-systems that are locally flat, admit
// elements in general position and are torus-maximal.
std::vector<CarrierAlgebra> enumerate_complex_carriers();

struct ComplexOrbit {
    CarrierAlgebra carrier;
    TensorElement rep;  // element of s1 in general position
    Label alpha{}, gamma{};
    int dim = 0;
    int table_row = 0;
};
std::vector<ComplexOrbit> complex_orbits();

// Three-subsets of Phi1 with an A3 Dynkin diagram, and their W0-orbits.
struct A3Census {
    int subsets = 0;
    int orbits = 0;
    std::vector<std::array<RootC, 3>> orbit_reps;  // as chains b1 - b2 - b3
};
A3Census a3_census();
bool is_a3_chain(const RootC& b1, const RootC& b2, const RootC& b3);

// The hand-built real carriers: all of g graded with s1 of dimension 6
// (split Cartan), split sl3 with two-dimensional s1, and su(1,2) normalised
// by the Cartan with three compact directions.
CarrierAlgebra carrier_full_split();
CarrierAlgebra carrier_sl3_split();
CarrierAlgebra carrier_su12();

// det of T -> ad-matrix of s0 on T1 y1 + ... + Tm ym; zero locus = not in general position.
MultiPoly general_position_poly(const CarrierAlgebra& c);
bool in_general_position(const CarrierAlgebra& c, const QMatrix& e);
// p == c * q for a nonzero rational c
bool proportional(const MultiPoly& p, const MultiPoly& q);

struct GeneralPositionSet {
    std::vector<TensorElement> basis;  // sigma^-1 of s1 basis
    MultiPoly gp_poly;
    std::vector<TensorElement> candidates;
    std::vector<std::string> moves;
    bool unreduced = false;
};

// Gamma -> Gamma2 by the stored recipe of each hand-built carrier.
GeneralPositionSet reduce_gamma(const CarrierAlgebra& c);

// Real rank of a reductive subalgebra of g0 (no theta-stability needed).
int real_rank_g0(const std::vector<QMatrix>& l);

// Homogeneous triple through sigma(e) with h in s0; compares the real ranks of
// the g0-centralisers of the triple and of s.
// Throws std::invalid_argument unless sigma(e) lies in s1 in general position.
bool corresponds(const TensorElement& e, const CarrierAlgebra& c);

// Real Cartan subalgebra h0^id of g0. id - 1 written in binary is the
// compact pattern in factor order alpha1, alpha0, alpha4, alpha3 (1 = compact),
// so h0^1 is the split torus and h0^14 has alpha4 as its only split factor.
struct RealCartan {
    int id = 1;
    std::array<FactorKind, 4> kinds{};
    int compact_dim() const;
    std::string name() const;  // "h0^id"
};
std::vector<RealCartan> real_cartans();

// Value of a root on the factor elements H_k.
std::array<int, 4> factor_coords(const RootC& c);
// Complex conjugation on roots for a Cartan: negates the compact factor coordinates.
RootC conjugate_root(const RootC& c, const RealCartan& t);

// Graded Psi of the complex carriers moved by W, kept when stable under the
// conjugation of t (defined over R) and strongly t-regular (no compact
// factor root normalises s), one per real_weyl orbit. Carriers over the
// split Cartan carry matrix bases; the others carry Psi and degrees only.
std::vector<CarrierAlgebra> enumerate_real_carriers(const RealCartan& t);
std::vector<CarrierAlgebra> enumerate_real_carriers();

}  // namespace atlas
