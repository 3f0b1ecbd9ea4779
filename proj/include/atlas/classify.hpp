#pragma once

#include "atlas/rootsys.hpp"
#include "atlas/tables.hpp"
#include "atlas/tensormod.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct InvariantTensors {
    QMatrix epsilon;               // 2x2
    std::array<QMatrix, 3> pauli;  // S1, iS2, S3 (real form)
    QMatrix eta;                   // Tr(Sx Sy)
    QMatrix eta_inv;
};
const InvariantTensors& invariant_tensors();

inline constexpr std::array<std::pair<int, int>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// T(i,j)(v), 0-based factors, composite index order (0,0),(0,1),(1,0),(1,1).
QMatrix quadratic_classifier(const TensorElement& v, int i, int j);
// Sixteen 27x27 matrices: triples (0,1,2),(0,1,3),(0,2,3),(1,2,3), each with kinds SSS, SAA, ASA, AAS.
std::vector<QMatrix> quartic_classifiers(const TensorElement& v);
// The odd-antisymmetrized projections (AAA, ASS, SAS, SSA); these vanish identically.
std::vector<QMatrix> quartic_odd_projections(const TensorElement& v);

using Fingerprint = std::array<Signature, 6>;
Fingerprint quadratic_fingerprint(const TensorElement& v);
std::vector<Signature> quartic_fingerprint(const TensorElement& v);

struct OrbitRecord {
    TensorElement rep;
    int complex_class = 0;  // 1..30
    int dim = 0;
    Label alpha{}, gamma{}, beta{};
    int alpha_k = 0, gamma_k = 0, beta_k = 0;  // Table II indices
    std::optional<int> delta;
    Fingerprint signatures{};
    bool unresolved = false;

    // (alpha, gamma, beta, signatures)
    auto key() const { return std::tie(alpha, gamma, beta, signatures); }
};

// Throws std::invalid_argument on zero or non-nilpotent input.
OrbitRecord fingerprint(const TensorElement& rep);
std::vector<OrbitRecord> fingerprint_all_serial(const std::vector<TensorElement>& reps);
std::vector<OrbitRecord> fingerprint_all_parallel(const std::vector<TensorElement>& reps);

// Complex class (Table I row number) of an (alpha, gamma) pair, 0 if none.
int complex_class_of(const Label& alpha, const Label& gamma);

// Groups by (alpha, gamma, beta); groups of size > 1 get delta = 1.. in
// (signatures, canonical rep) order. Output sorted by (complex_class, rep).
std::vector<OrbitRecord> assign_delta(std::vector<OrbitRecord> records);

struct MergeResult {
    int count = 0;
    std::vector<OrbitRecord> records;  // merged records carry delta unset
};
// Merges delta-pairs with alpha in alpha(7)..alpha(11).
MergeResult merge_to_gprime(const std::vector<OrbitRecord>& records);

struct RepairTarget {
    int dim = 0;
    Label alpha{}, gamma{};
    std::vector<Label> betas;            // Table II beta targets the expansions must cover
    std::vector<std::string> printed;    // printed tokens (3 or 4 signs); empty for a free search
};

struct RepairResult {
    std::vector<std::string> support;
    TensorElement element;       // leading expansion of the support
    int candidates_labels = 0;   // insertions matching dim, alpha, gamma
    int candidates_valid = 0;    // ... and covering the beta targets
};

// Insert one sign into every short printed token (or search all supports
// of at most support_bound tuples when nothing is printed) and return the
// first support whose sign expansions all match the target.
// Throws std::runtime_error if nothing matches.
RepairResult repair_table_row(const RepairTarget& target, int support_bound = 4);

std::string to_json(const std::vector<OrbitRecord>& records);
std::string to_tsv(const std::vector<OrbitRecord>& records);
std::string fingerprint_string(const Fingerprint& f);

}  // namespace atlas
