#pragma once

#include <string>

#include "addseq/ilp_model.hpp"

namespace addseq {

// CPLEX-LP text. Objective first (named COST), constraints in construction
// order, fixed variables as equal bounds, Binary/General sections.
std::string emit_lp(const IlpModel& model);

// MPS text with the same names and ordering; objective row COST.
std::string emit_mps(const IlpModel& model);

// Reads MPS text produced by emit_mps. The result carries no instance
// metadata; compare with structurally_equal.
IlpModel parse_mps(const std::string& text);

} // namespace addseq
