#pragma once

#include "atlas/classify.hpp"
#include "atlas/scalar.hpp"
#include "atlas/tensormod.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct GroebnerBudget {
    long max_pairs = 4000;   // S-pairs reduced
    size_t max_basis = 300;  // basis size during the run
    int max_degree = 24;     // total degree of any new element
};

struct PolyIdeal {
    std::vector<std::string> names;  // lex order, names[0] largest
    std::vector<MultiPoly> generators;
    std::optional<std::vector<MultiPoly>> basis;  // reduced, monic, sorted by leading monomial
};

// Normal form of f modulo g (full reduction).
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& g);
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

// Fills ideal.basis; returns false (basis left empty) if the budget runs out.
bool buchberger(PolyIdeal& ideal, const GroebnerBudget& budget = {});
// Every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& g);
bool is_unit_ideal(const std::vector<MultiPoly>& basis);

// Variables a1,b1,c1,d1,...,a4,b4,c4,d4; det equations then act(g,e) - e2.
PolyIdeal conjugacy_ideal(const TensorElement& e, const TensorElement& e2);

// Real-infeasibility witness in a Groebner basis: a polynomial whose terms all
// have even exponents and one sign, with a nonzero constant term.
std::optional<MultiPoly> real_infeasibility_witness(const std::vector<MultiPoly>& basis);

// Rational point of a zero-dimensional-ish lex basis by back substitution;
// free variables are tried from a small fixed list.
std::optional<std::vector<Q>> rational_point(const std::vector<MultiPoly>& basis, int nvars);
// Up to limit distinct points from the same search; a nonzero seed shuffles
// the candidate values at every node.
std::vector<std::vector<Q>> rational_points(const std::vector<MultiPoly>& basis, int nvars, size_t limit, std::uint64_t seed = 0);

struct ConjugacyVerdict {
    enum class Kind { Conjugate, NotConjugate, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<GroupElement4> witness;  // Conjugate: act(witness, e) = e2
    // Witness factors have positive determinant instead of 1. Dividing each
    // factor by the root of its determinant leaves a positive multiple of e2,
    // which exp(t h) scales back, so e and e2 are still G0-conjugate.
    bool scaled = false;
    std::string certificate;               // NotConjugate
    std::string reason;                    // Unknown, or the route that decided
};
std::string to_string(ConjugacyVerdict::Kind k);

struct DecideOptions {
    bool invariant_precheck = true;
    bool witness_search = true;
    bool full_fallback = true;  // 16-variable ideal when Z(h) reduction fails
    GroebnerBudget budget;
};

// Pre-check by labels and signatures, then sign-matrix witnesses in {+-I, +-J}^4,
// then the ideal over the centralizer of a shared characteristic.
ConjugacyVerdict decide_conjugacy(const TensorElement& e, const TensorElement& e2, const DecideOptions& opt = {});

struct ClassSplit {
    std::vector<OrbitRecord> classes;  // first record of each class, input order
    int unknown_pairs = 0;             // records dropped after an Unknown verdict
};
// Records with equal keys are compared by decide_conjugacy against the
// classes found so far; records with new keys open new classes.
ClassSplit split_classes(const std::vector<OrbitRecord>& records, const DecideOptions& opt = {});

// Classes of a that have no conjugate in b (keys compared first).
std::vector<OrbitRecord> unmatched_classes(const std::vector<OrbitRecord>& a, const std::vector<OrbitRecord>& b,
                                           const DecideOptions& opt = {});

// act(witness, e) = e2 with unimodular factors.
bool verify_witness(const GroupElement4& g, const TensorElement& e, const TensorElement& e2);
// act(g, e) = e2 with every det g_k > 0.
bool verify_scaled_witness(const GroupElement4& g, const TensorElement& e, const TensorElement& e2);
// Re-checks a Conjugate verdict's witness by exact action.
bool verify_verdict(const ConjugacyVerdict& v, const TensorElement& e, const TensorElement& e2);

}  // namespace atlas
