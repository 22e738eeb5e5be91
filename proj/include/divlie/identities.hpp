#pragma once

#include <string>
#include <vector>

#include "divlie/report.hpp"

namespace divlie {

/// Names of the exhaustively checkable closed-form bracket identities.
std::vector<std::string> identity_names();

/// Verifies one identity family for every monomial exponent of total degree
/// <= max_degree (and every admissible index pair) in n variables. The
/// witness on failure carries the first counterexample.
CheckResult check_identity(const std::string& name, int n, int max_degree);

/// The whole suite at once.
std::vector<CheckResult> check_all_identities(int n, int max_degree);

}  // namespace divlie
