#pragma once

// Invariant suites run by `verify` and by the acceptance gate.

#include <string>
#include <vector>

namespace charseq {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // largest residual seen (0 for exact checks)
    double tolerance = 0.0;
    std::string detail;
};

std::vector<CheckResult> ff_char_checks();
std::vector<CheckResult> seqgen_checks();
std::vector<CheckResult> correlate_checks();
std::vector<CheckResult> kernel_checks();
std::vector<CheckResult> params_checks();
std::vector<CheckResult> omega_checks();
std::vector<CheckResult> constants_checks();
/// A deliberately corrupted log table must be rejected.
std::vector<CheckResult> negative_control_checks();

std::vector<CheckResult> all_checks();

/// One line per check, then a totals line; byte-stable across runs.
std::string format_checks(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

} // namespace charseq
