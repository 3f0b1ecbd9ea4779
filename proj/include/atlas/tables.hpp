#pragma once

#include "atlas/rootsys.hpp"
#include "atlas/tensormod.hpp"

#include <string>
#include <vector>

namespace atlas {

// Table II: alpha(a) and the gamma(a;k) = beta(a;k) labels, 1-based.
const std::vector<Label>& alpha_labels();                  // 11
const std::vector<std::vector<Label>>& gamma_beta_labels();  // per alpha
int alpha_index(const Label& a);                             // 0 if absent
int gamma_index(int alpha, const Label& g);                  // 0 if absent

struct TableIRow {
    int row;
    int dim;
    int alpha;
    int gamma;          // k of gamma(alpha;k) after repair
    int printed_gamma;  // k as printed
    std::string printed;                // representative column as printed
    std::vector<std::string> support;   // repaired full tuples, leading term first
    std::vector<int> betas;             // printed beta(alpha;k) indices
    int delta_count;                    // printed delta multiplicity per (gamma,beta), 0 if none
    std::string note;                   // repair annotation
};

const std::vector<TableIRow>& table1();

// All 2^(n-1) sign expansions of a row's support, leading coefficient +1.
// Expansion j has sign pattern given by the bits of j (bit n-2-i set: term i+1 negative).
std::vector<TensorElement> expand_row(const TableIRow& r);

}  // namespace atlas
