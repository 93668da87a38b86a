#pragma once

#include <string>
#include <vector>

namespace kutate {

enum class CheckStatus { Pass, Fail, Skip };

struct SuiteCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;  // counterexample or skip reason
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool all_passed() const;
    void add(std::string name, bool pass, std::string detail = "");
    void skip(std::string name, std::string reason);
};

struct VerifyOptions {
    int p_max = 5;
    int n_max = 6;  // odd primes are capped at 4
    int lo = -20;
    int hi = 40;
    int r_max = 10;
};

/// Runs every identity suite: the product table against its p = 2
/// specialization, the resolution oracle against the table rows and the Tor
/// statements, recursion against closed forms, duality, Tate consistency,
/// and the rank-by-rank telescoped-sum reconciliation. Failures are data,
/// not errors; oracle rows whose window cannot honor the safety margin are
/// reported as skipped.
std::vector<SuiteReport> verify_all(const VerifyOptions& options);

}  // namespace kutate
