#pragma once

#include "qcoinv/coact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qcoinv {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages;
};

/// Property suites: coefficient arithmetic, associativity and rewriting fuzz,
/// determinant centrality, multiplication-comorphism relation preservation,
/// Hopf axioms, comodule axioms. Deterministic for a fixed seed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed);

bool all_passed(const std::vector<SuiteResult>& results);

/// Random homogeneous element with small coefficients (test fuzz helper).
NCPoly random_homogeneous(AlgebraPtr a, int degree, std::uint64_t& state);

}  // namespace qcoinv
