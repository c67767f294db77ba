#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goedisc/harness/records.hpp"

namespace goedisc::harness {

struct CheckResult {
    std::string suite;
    std::string check;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// densities, selberg, moments, ratio, laplace, eigensolver
const std::vector<std::string>& verify_suites();

/// Runs one named suite, or every suite for "all". A failing check is
/// recorded and the remaining checks still run. Throws DomainError for an
/// unknown suite name.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed = 0);

/// suite,check,measured,tolerance,passed
Table verify_table(const VerifyReport& report);

}  // namespace goedisc::harness
