#pragma once

// Command-line front end. Exit codes: 0 ok, 1 mathematical negative
// (invalid datum, not essentially standard, bad prime, failed check),
// 2 usage or input error.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace prettygood {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions {
    bool deep = false;
    std::size_t exhaustive_limit() const { return deep ? 18 : 12; }
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool ok() const { return failures.empty(); }
};

/// Property suites run by `selftest`.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts);

}  // namespace prettygood
