#ifndef KSBOUND_BOUNDS_HPP
#define KSBOUND_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ksbound/functional.hpp"
#include "ksbound/polytope.hpp"
#include "ksbound/rational.hpp"

namespace ksb {

/// Max of a linear functional over the deterministic ({0,1}) vertices only;
/// the bound a KS-noncontextual (outcome-deterministic) model must satisfy.
Rational ks_bound(const std::vector<RfVertex>& vertices, const Functional& f);

/// Max over all vertices, indeterministic response functions included.
Rational polytope_bound(const std::vector<RfVertex>& vertices, const Functional& f);

struct ConditionalMax {
  Rational value;
  RfVertex witness;
};

/// Max of T over the slice a <= F(w) <= b, by fresh vertex enumeration of
/// the sliced polytope. F must be linear. Throws Errc::empty_slice.
ConditionalMax conditional_max(const HRepPolytope& p, const Functional& constraint,
                               const Rational& a, const Rational& b, const Functional& t);

struct Envelope {
  Rational alpha;
  Rational beta;  // envelope line T(a) <= alpha - beta * a
};

/// Line through the extreme-threshold samples; every interior sample must
/// lie on it exactly. A sample above the line voids the envelope claim, one
/// below voids the claimed linearity; both are reported as errors.
Envelope fit_linear_envelope(const std::vector<std::pair<Rational, Rational>>& samples);

/// (v - a) / (r - a): least measure the constraint value v forces onto the
/// ontic states with functional value >= a, given polytope max r.
double measure_lower_bound(double v, double a, double r);

/// Inputs of the measure-theoretic bound pipeline.
struct OnciSpec {
  HRepPolytope polytope;
  Functional constraint;               // linear functional F
  Scalar operational_value;            // v, e.g. 4/3 or sqrt(5)
  Rational polytope_max;               // r = max F over the polytope
  RfVertex polytope_max_witness;
  Rational mixing_coefficient;         // c in (0,1]; 1 state-independent, 1/d mixed-state route
  Functional envelope_body;            // T, convex
  std::vector<Rational> thresholds;    // envelope sample thresholds, ascending
  Rational slice_limit;                // b, rational cap of v (or r)
  std::vector<std::string> notes;
};

/// Default interior threshold between lo and hi: the midpoint, replaced by
/// the nearest multiple of 1/8 when the midpoint's denominator exceeds 8.
Rational default_interior_threshold(const Rational& lo, const Rational& hi);

struct EnvelopeSample {
  Rational threshold;
  Rational max_value;
  RfVertex witness;
};

/// Certified output: bound = min over feasible a of
/// B(a) = 1 - c * beta * (a - p)(v - a) / (r - a), p = (alpha - 1) / beta.
struct BoundReport {
  double bound = 1.0;
  double a_star = 0.0;
  Envelope envelope;
  Rational breakpoint;  // p
  std::vector<EnvelopeSample> samples;
  Rational polytope_max;
  RfVertex polytope_max_witness;
  bool nontrivial = false;  // bound < 1
  std::vector<std::string> notes;
};

/// Runs the full pipeline: conditional maxima at the sample thresholds,
/// envelope fit, closed-form optimizer a* = r - sqrt((r-p)(r-v)) clamped to
/// the feasible interval, golden-section cross-check at 1e-12.
BoundReport derive_onci_bound(const OnciSpec& spec);

/// Enumerated max of (1/n) sum_i max{w_i, w_{i+1}, w_{i'}} + sum_j w_j + 2
/// over the cycle-extended(n) polytope, cross-checked against the closed
/// form floor(n/2) + 3 (Errc::aprime_mismatch on disagreement).
Rational ncycle_aprime_bound(int n);

/// The named functionals of a built-in scenario, wired to its label order.
struct ScenarioFunctionals {
  Functional noncontextuality;  // "I"
  Functional constraint;        // "F"
  Functional envelope_body;     // "T"
  Functional aprime_body;       // "aprime"
  std::vector<int> a_contexts;  // 0-based context indices defining A
  /// v and c; absent for cycles (no measure-bound pipeline there).
  std::optional<Scalar> operational_value;
  std::optional<Rational> mixing_coefficient;
};

/// scenario_name in {"yo13", "kcbs", "cycle(n)"} (also "cycle:n").
ScenarioFunctionals builtin_functionals(const std::string& scenario_name);

}  // namespace ksb

#endif  // KSBOUND_BOUNDS_HPP
