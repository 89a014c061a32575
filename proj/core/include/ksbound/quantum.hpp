#ifndef KSBOUND_QUANTUM_HPP
#define KSBOUND_QUANTUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksbound/functional.hpp"
#include "ksbound/graph.hpp"

namespace ksb {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec normalized(Vec a);
/// d = 3 only; result sign-normalized (first nonzero component positive).
Vec cross3(const Vec& a, const Vec& b);

/// Real unit vectors realizing a graph: one ray per label, orthogonal
/// across every edge.
struct QuantumRealization {
  int dim = 3;
  std::vector<Vec> vectors;        // aligned with graph label order
  std::optional<Vec> psi;          // distinguished preparation, unit
  bool maximally_mixed = false;    // default preparation is I/d
};

struct Preparation {
  enum class Kind { maximally_mixed, psi, pure };
  Kind kind = Kind::maximally_mixed;
  Vec state;  // for Kind::pure

  static Preparation mixed() { return {Kind::maximally_mixed, {}}; }
  static Preparation distinguished() { return {Kind::psi, {}}; }
  static Preparation pure(Vec v) { return {Kind::pure, std::move(v)}; }
};

/// Born probability of the outcome projector |vectors[var]><vectors[var]|.
double outcome_probability(const QuantumRealization& r, int var, const Preparation& prep);

/// "yo13", "kcbs5-extended", "cycle-extended(n)". Constructions are
/// validated against the corresponding built-in graph and fail loudly on
/// any orthogonality mismatch.
QuantumRealization builtin_realization(const std::string& name);

struct RealizationReport {
  int norm_checks = 0;
  int orthogonality_checks = 0;
  int completeness_checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Unit norms, edge orthogonality (1e-9), and per-full-context completeness
/// sum of projectors = identity (1e-12). Failures listed, never thrown.
RealizationReport verify_realization(const ExclusivityGraph& g, const QuantumRealization& r);

/// Quantum value of a linear functional: sum c_v Tr(rho P_v) + constant.
double quantum_value(const Functional& f, const QuantumRealization& r, const Preparation& prep);

/// Operational statistics p(k | context, preparation).
struct OperationalStats {
  std::string preparation;
  /// [context index][outcome k-1] -> probability.
  std::vector<std::vector<double>> probabilities;
};

OperationalStats operational_stats(const QuantumRealization& r,
                                   const std::vector<Context>& contexts,
                                   const Preparation& prep, std::string tag);

/// How the second term of A' is evaluated.
struct AprimeDefinition {
  enum class Mode { mixed_state_term, plus_i };
  Mode mode = Mode::mixed_state_term;
  std::vector<Context> a_contexts;
  /// mixed_state_term: (context, outcome k 1-based) pairs read at P_m.
  std::vector<std::pair<Context, int>> terms;
  /// plus_i: the inequality functional and its preparation.
  Functional inequality;
  Preparation inequality_prep;
};

struct OnciValues {
  double a = 0.0;        // average predictability, 1 by construction
  double a_prime = 0.0;  // 3A + scenario-specific second term
};

OnciValues quantum_onci_values(const AprimeDefinition& def, const QuantumRealization& r);

/// A alone: mean of p(k | M_i, P_{i,k}) over the given contexts with
/// eigenstate preparations.
double quantum_average_predictability(const std::vector<Context>& contexts,
                                      const QuantumRealization& r);

struct UniformAverageReport {
  int contexts_checked = 0;
  double max_deviation = 0.0;  // elementwise vs identity/d
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Checks (1/d) sum_k P_{i,k} = identity/d per listed full context: the
/// uniform-average preparations all equal the maximally mixed one.
UniformAverageReport verify_uniform_average(const std::vector<Context>& full_contexts,
                                            const QuantumRealization& r);

/// Deterministic Haar-like sample of unit vectors (fully specified RNG, so
/// reports stay byte-identical across runs).
std::vector<Vec> random_pure_states(std::uint64_t seed, int count, int dim);

}  // namespace ksb

#endif  // KSBOUND_QUANTUM_HPP
