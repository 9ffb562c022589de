// Analysis configuration: one JSON document describing the curve, whirl
// points, exponent, weight, symbol table, expression, and sweep parameters.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sio/calculus.hpp"

namespace sio {

struct AnalysisConfig {
  SpaceModel space;
  std::map<std::string, PCSymbol> symbols;
  std::string expression;  // empty means no operator-level commands
  Expr expr;
  SweepConfig sweep;
  uint64_t seed = 0;
  int dini_pair_budget = 200000;
};

// Throws Error{config} on malformed documents, Error{precondition} when a
// value violates a model invariant (e.g. weight point off the curve).
AnalysisConfig load_config(const std::string& json_text);

}  // namespace sio
