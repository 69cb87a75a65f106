#pragma once

#include <string>
#include <vector>

namespace cfl {

struct CheckResult {
	std::string name;
	bool pass = false;
	std::string detail;  // filled on failure (coordinates, counterexample)
};

struct VerifyReport {
	std::vector<CheckResult> checks;
	int passed() const;
	int failed() const;
	bool ok() const { return failed() == 0; }
};

// Runs the structural suites: validation and grading laws, Leibniz, the
// Phi/Psi null-homotopies, the roll bound, pair-invariant properties
// (monotonicity, sandwich, slope, symmetry, swap variants, ultrametric
// triples), randomized tensor/dual validation and the filtration
// normalization property. scope is "all" or a builtin name.
VerifyReport verify(const std::string& scope, int slack = 0);

}  // namespace cfl
