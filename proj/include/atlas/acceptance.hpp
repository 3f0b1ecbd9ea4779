#pragma once

#include "atlas/groebner.hpp"
#include "atlas/tensormod.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace atlas {

enum class CriterionStatus { pass, fail, degraded, inconsistent };
std::string to_string(CriterionStatus s);

struct CriterionResult {
    int id = 0;
    std::string title;
    CriterionStatus status = CriterionStatus::fail;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 1;
    GroebnerBudget budget;
    // Fault injection: the intertwining check uses sigma with the images of
    // (++++) and (+++-) swapped.
    bool corrupt_sigma = false;
    std::vector<int> only;  // criterion ids to run; empty runs all
};

// Criteria 1-11 in order. Unknown conjugacy verdicts (budget exhausted)
// give degraded rather than fail; cross-route disagreement gives inconsistent.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// 0 all pass or degraded, 1 some failure, 3 some inconsistency.
int acceptance_exit_code(const std::vector<CriterionResult>& results);
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace atlas
