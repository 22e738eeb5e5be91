#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divlie/derivation.hpp"
#include "divlie/report.hpp"

namespace divlie {

/// The recognized verification suites:
/// basis-lemma, gen-div0, gen-divc, minimality, simplicity, derived, cartan,
/// equivariance, module-simple, identities.
std::vector<std::string> theorem_tags();

/// Generators d_1, x_2^2 d_1, ..., x_n^2 d_1, x_1^2 d_2, ..., x_1^2 d_n of the
/// zero-divergence algebra; adding x_1 d_1 generates the constant-divergence one.
std::vector<Derivation> minimal_generators(int n);

/// Runs one suite at the given truncation. The seed only matters for the
/// randomized suites (equivariance, simplicity); fixed seed, fixed report.
Report verify_theorem(const std::string& tag, int n, int cutoff, uint64_t seed);

}  // namespace divlie
