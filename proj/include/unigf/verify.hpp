#pragma once

// Named identity checks grouped into suites, shared by the CLI `verify`
// command and the test binaries.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unigf/unified.hpp"

namespace unigf {

enum class Suite { all, recurrences, lemmas, ode, enumeration };

std::string to_string(Suite s);
Suite parse_suite(std::string_view text);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    unsigned n_max = 8;
    Suite suite = Suite::all;
    // Deliberately corrupts one computation so a check must fail:
    // "main-recurrence" perturbs U_n (n >= 3) from the first-order recurrence,
    // "bruteforce" perturbs the enumerated S(n,k) polynomials.
    std::optional<std::string> inject_fault;
};

/// Fixed alpha = 1 sample points for the differential-equation checks.
const std::vector<ParamPoint>& ode_sample_points();

std::vector<CheckResult> run_checks(const VerifyOptions& opts);

}  // namespace unigf
