#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fluxcoh {

struct SuiteConfig {
    int genus = 2;
    std::vector<std::string> symbols = {"th"};
    std::uint64_t seed = 7;
    int cases = 100;
};

struct CheckResult {
    std::string name;
    std::string identity;  // the mathematical statement being checked
    bool pass = false;
    std::string expected;
    std::string actual;
};

// registered suite names, sorted
std::vector<std::string> suite_names();

// run one suite; throws std::invalid_argument for unknown names
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace fluxcoh
