#pragma once

#include <string>
#include <vector>

namespace stg::verify {

struct CheckRecord {
    std::string suite;
    std::string claim;    // what is being checked
    std::string instance; // on which inputs
    std::string verdict;  // PASS | FAIL | WARN
    std::string detail;   // counts, witnesses, counterexamples
};

// Suites in canonical order: theorem1, gdc, complete, general, dimbounds,
// feasibility.
std::vector<std::string> suite_names();

// Run one suite, or "all" for every suite in order.
std::vector<CheckRecord> run_suite(const std::string& name);

} // namespace stg::verify
