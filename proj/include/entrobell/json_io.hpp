#pragma once

#include <string>

#include <json.hpp>

#include "entrobell/entropy.hpp"
#include "entrobell/inequalities.hpp"
#include "entrobell/probability.hpp"
#include "entrobell/quantum.hpp"
#include "entrobell/scan.hpp"

namespace entrobell {

// Reads a distribution document:
//   {"variables": ["A","B","C"],
//    "probabilities": {"+++": 0.125, "++-": 0.125, ...}}
// Keys are strings over {+,-}; character i is the outcome of variable i and
// '+' means +1. All 2^n keys must be present and no others.
// Errors: IO_ERROR (unreadable file), BAD_ARITY (malformed JSON or wrong
// document shape), plus the make_joint value errors.
JointDistribution load_distribution(const std::string& path);

// Reads a count-table document:
//   {"counts": {"abc": 10, "abC": 4, ..., "ABC": 0}}
// Keys run over {a,A}x{b,B}x{c,C}; lowercase means the property holds.
// Errors: IO_ERROR, BAD_ARITY (shape), OUT_OF_RANGE (negative, non-integer
// or oversized cells, or an all-zero table).
CountTable load_count_table(const std::string& path);

// Flat JSON views used by the CLI; field names match the struct fields.
nlohmann::ordered_json to_json(const PairwiseEntropySummary& summary);
nlohmann::ordered_json to_json(const EntropyDiagram& diagram);
nlohmann::ordered_json to_json(const CorrelationSet& corr);
nlohmann::ordered_json to_json(const InequalityReport& report);
nlohmann::ordered_json to_json(const NegativityDiagnosis& diagnosis);
nlohmann::ordered_json to_json(const OptimumReport& optimum);

}  // namespace entrobell
