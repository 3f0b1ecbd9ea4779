#pragma once

#include "atlas/classify.hpp"
#include "atlas/groebner.hpp"
#include "atlas/rootsys.hpp"
#include "atlas/tensormod.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace atlas {

// Points of h0 in torus (epsilon) coordinates.
using TorusPoint = std::array<Q, 4>;

struct CharacteristicSet {
    std::vector<TorusPoint> H;       // union of the W-orbits of the complex characteristics
    std::vector<TorusPoint> Hprime;  // W0-dominant representatives of H
    std::vector<bool> homogeneous_flags;  // per element of Hprime
    std::vector<Label> alpha;             // per element of Hprime

    int homogeneous_count() const;
};

struct HomogeneityOptions {
    int trials = 32;
    int height = 10;  // numerators and denominators of sampled coefficients
    std::uint64_t seed = 1;
    bool crosscheck = true;
};

// Dominant characteristic with the given alpha label.
TorusPoint characteristic_from_alpha(const Label& alpha);
TorusPoint w0_dominant(const TorusPoint& x);
// W0-dominant element of h0 with the given gamma label
LieElement characteristic_from_gamma(const Label& gamma);

// Characteristics of the nonzero complex orbits meeting g1 (alpha labels
// taken from the carrier route), expanded by W and reduced by W0.
CharacteristicSet complex_characteristics(const HomogeneityOptions& opt = {});

// Random e in g1(2) closing a triple with h. With crosscheck set, a
// disagreement with the carrier classes throws std::logic_error.
// Throws std::invalid_argument unless h lies in h0.
bool homogeneity_test(const LieElement& h, const HomogeneityOptions& opt = {});

// {x in g1 : [h, x] = k x} as tensors; h in g0.
std::vector<TensorElement> weight_space(const LieElement& h, int k);
std::vector<TensorElement> weight2_space(const LieElement& h);

// Cayley triples are (h, X, X^T) with X = 2 sigma(e).
inline constexpr int kCayleyScale = 2;

// Entries of [X, X^T] - h with e = T1 u1 + ... + Td ud over the weight-2 basis.
PolyIdeal cayley_equations(const LieElement& h);
// Coordinates of e over the weight-2 basis; nullopt if e lies outside g1(2).
std::optional<std::vector<Q>> weight2_coords(const LieElement& h, const TensorElement& e);
bool satisfies_cayley(const LieElement& h, const TensorElement& e);

struct ReducedSolution {
    TensorElement element;
    GroupElement4 g;  // element = act(g, input)
    std::vector<std::string> moves;
    bool unreduced = false;  // a rotation needed an irrational circle point
};

// One rotation per factor on which h vanishes, clearing the first coefficient
// pair it mixes, then an overall sign making the leading coefficient positive.
std::vector<ReducedSolution> centralizer_reduce(const LieElement& h, const std::vector<TensorElement>& solutions);

struct CayleySolutions {
    bool complete = false;  // Groebner basis computed within budget
    std::vector<TensorElement> points;
    std::vector<ReducedSolution> reduced;
    std::vector<OrbitRecord> classes;  // distinct by labels and conjugacy
    int unknown_pairs = 0;             // equal-key pairs left undecided
};

// Rational points of the Cayley ideal, reduced by Z(h) and sorted into G0-classes.
CayleySolutions solve_cayley(const LieElement& h, size_t max_points = 64, const GroebnerBudget& budget = {});

struct RealRouteOptions {
    int support_bound = 4;  // tuples in a sampled point
    int per_key = 8;        // points per fingerprint key sent to conjugacy tests
    DecideOptions decide;
};

struct CharacteristicOrbits {
    TorusPoint h;
    Label alpha{}, gamma{};
    int points = 0;       // +-1 points of g1(2) tried
    int open_points = 0;  // those closing a triple with h
    std::vector<OrbitRecord> classes;
    int unknown_pairs = 0;
};

// Real orbits with characteristic h: points of g1(2) with coefficients in
// {1,-1} on at most support_bound basis vectors (first coefficient 1), kept if
// they close a triple with h, then split into classes by fingerprint and conjugacy.
CharacteristicOrbits real_orbits_at(const TorusPoint& h, const RealRouteOptions& opt = {});
// Over the homogeneous characteristics of cs, in Hprime order; classes get delta labels.
std::vector<CharacteristicOrbits> real_orbits_by_characteristic(const CharacteristicSet& cs, const RealRouteOptions& opt = {});
std::vector<OrbitRecord> collect_classes(const std::vector<CharacteristicOrbits>& per_h);

}  // namespace atlas
