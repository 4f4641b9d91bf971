#include "entrobell/json_io.hpp"

#include <fstream>

namespace entrobell {

namespace {

using nlohmann::ordered_json;

ordered_json parse_document(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  }
  try {
    return ordered_json::parse(file);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::bad_arity,
                "malformed JSON in '" + path + "': " + e.what());
  }
}

// Outcome key of table index `idx` over n variables: character i is the
// outcome of variable i, '+' before '-' matching the index bit order.
std::string outcome_key(std::size_t idx, std::size_t n) {
  std::string key(n, '+');
  for (std::size_t i = 0; i < n; ++i) {
    if ((idx >> (n - 1 - i)) & 1u) key[i] = '-';
  }
  return key;
}

}  // namespace

JointDistribution load_distribution(const std::string& path) {
  const ordered_json doc = parse_document(path);
  if (!doc.is_object() || !doc.contains("variables") ||
      !doc.contains("probabilities")) {
    throw Error(ErrorCode::bad_arity,
                "document must be an object with 'variables' and "
                "'probabilities'");
  }
  const auto& vars = doc["variables"];
  if (!vars.is_array() || vars.empty() || vars.size() > 3) {
    throw Error(ErrorCode::bad_arity,
                "'variables' must be an array of 1 to 3 names");
  }
  std::vector<std::string> labels;
  for (const auto& v : vars) {
    if (!v.is_string()) {
      throw Error(ErrorCode::bad_arity, "'variables' entries must be strings");
    }
    labels.push_back(v.get<std::string>());
  }
  const auto& probs = doc["probabilities"];
  if (!probs.is_object()) {
    throw Error(ErrorCode::bad_arity, "'probabilities' must be an object");
  }
  const std::size_t n = labels.size();
  const std::size_t want = std::size_t{1} << n;
  if (probs.size() != want) {
    throw Error(ErrorCode::bad_arity,
                "'probabilities' must carry exactly " + std::to_string(want) +
                    " outcome keys, got " + std::to_string(probs.size()));
  }
  std::vector<double> table(want);
  for (std::size_t idx = 0; idx < want; ++idx) {
    const std::string key = outcome_key(idx, n);
    if (!probs.contains(key)) {
      throw Error(ErrorCode::bad_arity,
                  "missing probability for outcome '" + key + "'");
    }
    const auto& cell = probs[key];
    if (!cell.is_number()) {
      throw Error(ErrorCode::bad_arity,
                  "probability for '" + key + "' must be a number");
    }
    table[idx] = cell.get<double>();
  }
  return make_joint(std::move(labels), std::move(table));
}

CountTable load_count_table(const std::string& path) {
  const ordered_json doc = parse_document(path);
  if (!doc.is_object() || !doc.contains("counts") ||
      !doc["counts"].is_object()) {
    throw Error(ErrorCode::bad_arity,
                "document must be an object with a 'counts' object");
  }
  const auto& counts = doc["counts"];
  if (counts.size() != 8) {
    throw Error(ErrorCode::bad_arity,
                "'counts' must carry exactly 8 property keys, got " +
                    std::to_string(counts.size()));
  }
  std::array<std::uint64_t, 8> cells{};
  for (std::size_t idx = 0; idx < 8; ++idx) {
    // Lowercase means the property holds; index = 4*[not a]+2*[not b]+[not c].
    std::string key = "abc";
    if (idx & 4u) key[0] = 'A';
    if (idx & 2u) key[1] = 'B';
    if (idx & 1u) key[2] = 'C';
    if (!counts.contains(key)) {
      throw Error(ErrorCode::bad_arity, "missing count for '" + key + "'");
    }
    const auto& cell = counts[key];
    if (!cell.is_number_integer() || cell.get<std::int64_t>() < 0) {
      throw Error(ErrorCode::out_of_range,
                  "count for '" + key + "' must be a non-negative integer");
    }
    cells[idx] = cell.get<std::uint64_t>();
  }
  return make_count_table(cells);
}

nlohmann::ordered_json to_json(const PairwiseEntropySummary& summary) {
  return ordered_json{{"hA", summary.hA},   {"hB", summary.hB},
                      {"hC", summary.hC},   {"iAB", summary.iAB},
                      {"iAC", summary.iAC}, {"iBC", summary.iBC}};
}

nlohmann::ordered_json to_json(const EntropyDiagram& diagram) {
  return ordered_json{{"alpha", diagram.alpha}, {"beta", diagram.beta},
                      {"gamma", diagram.gamma}, {"abar", diagram.abar},
                      {"bbar", diagram.bbar},   {"gbar", diagram.gbar},
                      {"delta", diagram.delta}};
}

nlohmann::ordered_json to_json(const CorrelationSet& corr) {
  return ordered_json{{"ab", corr.ab},
                      {"ac", corr.ac},
                      {"bc", corr.bc},
                      {"a_prime_b", corr.a_prime_b},
                      {"a_a_prime", corr.a_a_prime}};
}

nlohmann::ordered_json to_json(const InequalityReport& report) {
  return ordered_json{{"id", to_string(report.id)},
                      {"lhs", report.lhs},
                      {"rhs", report.rhs},
                      {"margin", report.margin},
                      {"violated", report.violated}};
}

nlohmann::ordered_json to_json(const NegativityDiagnosis& diagnosis) {
  ordered_json entries = ordered_json::array();
  for (const auto& entry : diagnosis.entries) {
    entries.push_back(
        ordered_json{{"label", entry.label}, {"bound", entry.bound}});
  }
  return ordered_json{{"entries", std::move(entries)}};
}

nlohmann::ordered_json to_json(const OptimumReport& optimum) {
  return ordered_json{{"family", to_string(optimum.family)},
                      {"theta_star", optimum.theta_star},
                      {"phi_star", optimum.phi_star},
                      {"lhs_star", optimum.lhs_star},
                      {"inequality_id", to_string(optimum.inequality_id)}};
}

}  // namespace entrobell
