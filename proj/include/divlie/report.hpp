#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace divlie {

struct CheckResult {
    std::string check;
    bool pass = false;
    std::string witness;  // counterexample data; empty on pass
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
};

}  // namespace divlie
