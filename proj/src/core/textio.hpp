#pragma once

#include <string>

#include "complex.hpp"

namespace cfl {

// Complex text format:
//
//   complex <name> flavor <minus|infinity>
//   gen <id> grw <int> A <int>
//   d <id> = <mono>*<id> [+ <mono>*<id> ...]
//
// Monomials follow the polynomial syntax (U^a*V^b, ^1 and * omissible, 1 for
// the unit). Blank lines and lines starting with # are ignored. Entries with
// several monomials repeat the target: d x = U*y + V*y. Generator ids must
// not contain whitespace, '*', '+', '=' or '#'.
//
// parse() validates the result; serialize() emits the canonical form
// (sorted entries) so parse(serialize(c)) round-trips bit-exactly.

ComplexPtr parse_complex(const std::string& text);       // parse + validate
ComplexPtr parse_complex_file(const std::string& path);  // io_error on miss
std::string serialize_complex(const KnotComplex& c);

}  // namespace cfl
