#ifndef KSBOUND_SCENARIO_HPP
#define KSBOUND_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ksbound/functional.hpp"
#include "ksbound/graph.hpp"
#include "ksbound/quantum.hpp"
#include "ksbound/rational.hpp"

namespace ksb {

struct ConstraintSpec {
  std::vector<Label> labels;                          // F = sum of these
  std::vector<std::pair<int, int>> outcome_positions; // (context, outcome), 0-based ctx
  Scalar value;                                       // operational value v
  Rational mixing_coefficient;                        // c in (0, 1]
};

struct AprimeSpec {
  enum class Mode { mixed_state_term, plus_i };
  Mode mode = Mode::mixed_state_term;
  std::vector<std::pair<int, int>> terms;  // (context, outcome), 0-based ctx
};

struct QuantumSpec {
  std::map<Label, Vec> vectors;  // raw, possibly unnormalized
  bool maximally_mixed = true;
  std::optional<Vec> state;      // pure state when not maximally mixed
};

/// Declared target value: exact rational, sqrt surd, or plain float.
struct GoldenEntry {
  std::variant<Rational, Scalar, double> value;
  double tol = 0.0;

  double as_double() const;
  std::string render() const;
  bool is_exact() const;
};

/// Operational experiment description: graph, ordered measurement contexts,
/// the functionals under study, and optional quantum realization + golden
/// targets. Loaded from / saved to the schema-1 JSON format.
struct Scenario {
  std::string name;
  int schema = 1;
  int dimension = 3;
  ExclusivityGraph graph;
  std::vector<Context> contexts;  // member order = outcome order
  std::vector<int> a_contexts;    // 0-based indices into contexts
  std::optional<ConstraintSpec> constraint;
  std::optional<AprimeSpec> aprime;
  std::map<std::string, Functional> functionals;  // "I", "F", "T", "aprime", ...
  std::optional<QuantumSpec> quantum;
  std::map<std::string, GoldenEntry> golden;
  std::vector<std::string> notes;

  const Functional* find_functional(const std::string& fname) const;
  /// Realization built from the quantum spec (normalizes vectors).
  QuantumRealization realization() const;
  std::vector<Context> full_contexts() const;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text, const std::string& origin);
/// Canonical serialization: sorted keys, rationals as "p/q", floats at 12
/// significant digits. Byte-stable and round-trip-identical.
std::string scenario_to_json(const Scenario& s);

/// "yo13" | "kcbs" | "cycle:n" (n >= 4). Fully populated, goldens included.
Scenario builtin_scenario(const std::string& name);
bool is_builtin_scenario_name(const std::string& name);

/// Loads a file path, or a built-in by name when no such file exists.
Scenario resolve_scenario(const std::string& path_or_name);

}  // namespace ksb

#endif  // KSBOUND_SCENARIO_HPP
