#pragma once

#include <string>

#include "sle/instance.hpp"
#include "sle/reductions.hpp"

namespace sle {

// Canonical JSON: sorted keys, two-space indent, trailing newline. Edges are
// sorted by (lower endpoint rank, higher endpoint rank, page), where the rank
// of a vertex is its id in the instance and its spine position in a solution.
// Instance: {"ell", "H": {"spine", "edges": [{"u","v","page"}]}, "new_vertices",
// "new_edges": [{"u","v"}]}. Solution: {"spine", "pages": [{"u","v","page"}]}.
std::string emit_instance(const Instance& inst);
Instance parse_instance(const std::string& text);  // throws InputError

std::string emit_solution(const Instance& inst, const Layout& layout);
Layout parse_solution(const Instance& inst, const std::string& text);  // throws InputError

std::string emit_certificate(const ReductionCertificate& cert);
ReductionCertificate parse_certificate(const std::string& text);

// Standard DIMACS CNF, every clause with three distinct compatible literals.
CnfFormula parse_dimacs(const std::string& text);
std::string emit_dimacs(const CnfFormula& phi);

// {"vertices":[{"name":..,"color":1..k}],"edges":[{"u":..,"v":..}]}
MccInput parse_mcc(const std::string& text);
std::string emit_mcc(const MccInput& inp);

std::string read_file(const std::string& path);  // throws InputError
void write_file(const std::string& path, const std::string& text);

}  // namespace sle
