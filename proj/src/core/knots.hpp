#pragma once

#include <string>
#include <vector>

#include "complex.hpp"

namespace cfl {

struct LibraryEntry {
	std::string name;
	ComplexPtr complex;
	std::string provenance;
	// Knot complexes feed the pair invariants; the Hopf model carries formal
	// gradings only and is quarantined to map-level checks.
	bool is_knot = true;
};

const std::vector<LibraryEntry>& library();
ComplexPtr builtin(const std::string& name);  // unknown_name on miss
std::vector<std::string> builtin_names();
std::vector<std::string> builtin_knot_names();

}  // namespace cfl
