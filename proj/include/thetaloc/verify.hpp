#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thetaloc/json_io.hpp"

namespace thetaloc {

struct VerifyConfig {
    std::uint64_t seed = 42;
    double tol = 1e-10;
    double fd_step = 1e-5;
    std::vector<std::string> only;  // empty runs every check
};

enum class CheckStatus { Pass, Fail, Indeterminate };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    std::string claim;  // the structural fact the check asserts
    CheckStatus status = CheckStatus::Fail;
    std::vector<std::pair<std::string, double>> measured;
    std::string detail;  // diagnostics when not passing
    std::uint64_t seed = 0;
    double tol = 0;
    double wall_ms = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool overall_pass = false;
    bool any_indeterminate = false;
    std::string note;  // scope statement on what is asserted combinatorially only
};

// The registered check names, in execution order.
std::vector<std::string> verify_check_names();

// Run the reproduction suite (or the subset named in config.only).
// Deterministic given (seed, tol, fd_step). Overall pass iff every executed
// check passes; indeterminate classifications are never counted as passes.
VerifyReport run_verify(const VerifyConfig& config = {});

Json to_json(const VerifyReport& report);

}  // namespace thetaloc
