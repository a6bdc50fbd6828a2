#ifndef PVC_SUITES_HPP
#define PVC_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvc/budget.hpp"

namespace pvc {

/// One verified property: which invariant ran, with what parameters, what
/// was measured, and whether it held.
struct ResultRecord {
    std::string experiment;
    nlohmann::json params;
    nlohmann::json measured;
    bool pass = false;
};

struct SuiteOutcome {
    std::string suite;
    std::vector<ResultRecord> records;
    bool all_pass = false;
    /// Replayable serialization of the first failing instance (null if none).
    nlohmann::json failure_witness;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one named suite (or "all") under the master seed.  Per-task seeds
/// derive from (seed, suite, trial index).
SuiteOutcome run_suite(const std::string& name, std::uint64_t master_seed,
                       const Budget& budget = Budget{});

nlohmann::json to_json(const ResultRecord& r);
nlohmann::json to_json(const SuiteOutcome& o);

}  // namespace pvc

#endif
