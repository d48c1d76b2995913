#pragma once

#include <string>
#include <vector>

namespace cubicbase {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
};

// Named suites: table1, px-sweep, spx-sweep, splitmerge, star, colourings,
// corollaries, fpr, closure, all. Throws on an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 12345);

const std::vector<std::string>& suite_names();

}  // namespace cubicbase
