#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace autoseq {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    std::string title;
    CheckStatus status = CheckStatus::skipped;
    /// Main size bound the check ran with (terms, word lengths, or H).
    std::size_t horizon = 0;
    double elapsed_seconds = 0.0;
    /// Time the check is expected to finish within at its default horizon.
    double budget_seconds = 0.0;
    std::string detail;
    /// Set whenever status is fail.
    std::optional<std::string> mismatch;
};

struct CheckInfo {
    std::string id;
    std::string title;
    std::size_t default_horizon;
    double budget_seconds;
};

/// Registered checks in suite order.
const std::vector<CheckInfo>& check_catalog();
bool is_check_id(const std::string& id);

/// Runs one check; a horizon of 0 marks it skipped. Throws
/// std::invalid_argument for an unknown id.
CheckResult run_check(const std::string& id, std::optional<std::size_t> horizon = std::nullopt);

/// Runs the selected checks ("all" or an empty selection means every check)
/// on up to `jobs` threads. Results come back in suite order whatever the
/// completion order. Unknown ids throw std::invalid_argument before anything runs.
std::vector<CheckResult> run_checks(const std::vector<std::string>& selection,
                                    const std::map<std::string, std::size_t>& horizons = {},
                                    unsigned jobs = 1);

}  // namespace autoseq
