#pragma once

#include <string>
#include <vector>

namespace w3calc {

struct SuiteResult {
    std::string suite;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages; // first few failure descriptions
    bool passed() const { return failures == 0; }
};

// relations, expansions, hexagon, ledger
std::vector<std::string> suite_names();

// Runs one named property suite; throws std::invalid_argument on unknown names.
SuiteResult run_suite(const std::string& name);

} // namespace w3calc
