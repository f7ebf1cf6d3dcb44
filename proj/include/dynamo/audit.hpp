#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynamo/graph.hpp"
#include "dynamo/minimize.hpp"

#include "json.hpp"

namespace dynamo {

/// Check names accepted by run_audit, in report order.
const std::vector<std::string>& audit_check_names();

struct AuditConfig {
    std::size_t max_n = 8;
    std::size_t count = 200;
    std::uint64_t seed = 1;
    /// Empty means every check.
    std::vector<std::string> checks;
    /// Inclusive n range for the kn and gn checks.
    std::size_t range_lo = 3;
    std::size_t range_hi = 8;
    WorkBudget budget{2'000'000};
};

/// A failing instance, enough to replay it through the library alone.
struct Counterexample {
    std::string graph;
    std::vector<Threshold> thresholds;
    nlohmann::ordered_json witness;
};

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// Instances abandoned because an exact search hit its budget.
    std::size_t skipped = 0;
    std::optional<Counterexample> counterexample;
};

struct AuditReport {
    AuditConfig config;
    std::size_t instances_checked = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
};

/// Runs the selected property checks over seeded corpora. Each check draws
/// from its own generator derived from (seed, check name), so selecting a
/// subset of checks does not change any check's corpus. Throws
/// std::invalid_argument on an unknown check name.
AuditReport run_audit(const AuditConfig& config);

nlohmann::ordered_json to_json(const AuditReport& report);

}  // namespace dynamo
