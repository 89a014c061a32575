#include "ksbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ksbound/error.hpp"
#include "ksbound/graph.hpp"

namespace ksb {

namespace {

void require_linear(const Functional& f, const char* op) {
  if (!f.is_linear())
    fail(Errc::max_group_in_linear_op, std::string(op) + " needs a linear functional");
}

Integer rat_floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;  // GMP truncates toward zero
  if (f * d > n) --f;
  return f;
}

}  // namespace

Rational ks_bound(const std::vector<RfVertex>& vertices, const Functional& f) {
  require_linear(f, "ks_bound");
  std::vector<RfVertex> det = deterministic_vertices(vertices);
  if (det.empty()) fail(Errc::empty_deterministic_set, "polytope has no deterministic vertex");
  return max_functional(det, f).first;
}

Rational polytope_bound(const std::vector<RfVertex>& vertices, const Functional& f) {
  return max_functional(vertices, f).first;
}

ConditionalMax conditional_max(const HRepPolytope& p, const Functional& constraint,
                               const Rational& a, const Rational& b, const Functional& t) {
  require_linear(constraint, "conditional_max slice constraint");
  if (a > b)
    fail(Errc::empty_slice, "slice [" + rational_str(a) + ", " + rational_str(b) + "] is empty");
  RatVec coeffs = constraint.linear_coeffs(p.dimension());
  Rational shift = constraint.constant();
  std::vector<SliceConstraint> cuts{
      SliceConstraint{coeffs, Relation::greater_equal, a - shift},
      SliceConstraint{coeffs, Relation::less_equal, b - shift},
  };
  std::vector<RfVertex> verts = enumerate_vertices(slice(p, cuts));
  if (verts.empty())
    fail(Errc::empty_slice, "no response function has " + rational_str(a) +
                                " <= F <= " + rational_str(b));
  auto [value, witness] = max_functional(verts, t);
  return ConditionalMax{std::move(value), std::move(witness)};
}

Envelope fit_linear_envelope(const std::vector<std::pair<Rational, Rational>>& samples) {
  if (samples.size() < 3)
    fail(Errc::bad_envelope_samples, "need at least 3 samples, got " +
                                         std::to_string(samples.size()));
  std::vector<std::pair<Rational, Rational>> s = samples;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i].first == s[i + 1].first)
      fail(Errc::bad_envelope_samples, "duplicate threshold " + rational_str(s[i].first));

  const auto& lo = s.front();
  const auto& hi = s.back();
  Rational beta = (lo.second - hi.second) / (hi.first - lo.first);
  Rational alpha = lo.second + beta * lo.first;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    Rational on_line = alpha - beta * s[i].first;
    if (s[i].second > on_line)
      fail(Errc::envelope_above_line, "sample at a = " + rational_str(s[i].first) + " gives " +
                                          rational_str(s[i].second) + " > " +
                                          rational_str(on_line) + "; linear envelope claim fails");
    if (s[i].second < on_line)
      fail(Errc::envelope_not_collinear, "sample at a = " + rational_str(s[i].first) + " gives " +
                                             rational_str(s[i].second) + " < " +
                                             rational_str(on_line) +
                                             "; conditional maxima are not collinear");
  }
  return Envelope{std::move(alpha), std::move(beta)};
}

double measure_lower_bound(double v, double a, double r) {
  if (a == r) fail(Errc::division_by_zero, "measure bound undefined at a = r");
  return (v - a) / (r - a);
}

Rational default_interior_threshold(const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  if (denominator(mid) <= 8) return mid;
  Integer nearest = rat_floor(mid * 8 + Rational(1, 2));
  Rational rounded(nearest, 8);
  if (rounded <= lo || rounded >= hi) return mid;
  return rounded;
}

namespace {

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

}  // namespace

BoundReport derive_onci_bound(const OnciSpec& spec) {
  if (spec.mixing_coefficient <= 0 || spec.mixing_coefficient > 1)
    fail(Errc::schema_violation,
         "mixing coefficient must lie in (0, 1], got " + rational_str(spec.mixing_coefficient));
  std::vector<Rational> thresholds = spec.thresholds;
  std::sort(thresholds.begin(), thresholds.end());

  BoundReport report;
  report.polytope_max = spec.polytope_max;
  report.polytope_max_witness = spec.polytope_max_witness;
  report.notes = spec.notes;

  std::vector<std::pair<Rational, Rational>> points;
  for (const Rational& a : thresholds) {
    ConditionalMax cm = conditional_max(spec.polytope, spec.constraint, a, spec.slice_limit,
                                        spec.envelope_body);
    report.samples.push_back(EnvelopeSample{a, cm.value, std::move(cm.witness)});
    points.emplace_back(a, report.samples.back().max_value);
  }
  report.envelope = fit_linear_envelope(points);

  double v = spec.operational_value.value();
  double r = to_double(spec.polytope_max);
  double c = to_double(spec.mixing_coefficient);

  if (report.envelope.beta <= 0) {
    report.bound = 1.0;
    report.a_star = v;
    report.breakpoint = 0;
    report.nontrivial = false;
    report.notes.push_back("envelope slope is nonpositive; the inequality is trivial");
    return report;
  }
  report.breakpoint = (report.envelope.alpha - 1) / report.envelope.beta;
  double p = to_double(report.breakpoint);
  double beta = to_double(report.envelope.beta);

  if (v <= p) {
    // Nothing above the breakpoint: B(a) >= 1 on the whole interval.
    report.bound = 1.0;
    report.a_star = v;
    report.nontrivial = false;
    report.notes.push_back("operational value does not exceed the envelope breakpoint; no "
                           "violation region");
    return report;
  }
  if (v >= r)
    fail(Errc::interval_empty, "operational value must stay strictly below the polytope maximum");

  double lo = std::max(p, to_double(thresholds.front()));
  auto objective = [&](double a) { return 1.0 - c * beta * (a - p) * (v - a) / (r - a); };

  double a_star = r - std::sqrt((r - p) * (r - v));
  a_star = std::clamp(a_star, lo, v);
  double bound = objective(a_star);

  double a_check = golden_section_min(objective, lo, v, 1e-12);
  if (std::abs(objective(a_check) - bound) > 1e-12)
    fail(Errc::step_failed, "closed-form optimizer disagrees with golden-section search");

  report.bound = bound;
  report.a_star = a_star;
  report.nontrivial = bound < 1.0;
  return report;
}

Rational ncycle_aprime_bound(int n) {
  if (n < 4) fail(Errc::bad_cycle_length, "cycle length must be >= 4, got " + std::to_string(n));
  ExclusivityGraph g = builtin_graph("cycle-extended(" + std::to_string(n) + ")");
  std::vector<Context> contexts = maximal_cliques(g);
  HRepPolytope p = build_polytope(g, contexts, 3);
  std::vector<RfVertex> verts = enumerate_vertices(p);

  Functional body(Rational(2));
  for (int i = 1; i <= n; ++i) {
    body.add_linear(i - 1, Rational(1));
    body.add_max_group(Rational(1, n), {i - 1, i % n, n + i - 1});
  }
  Rational enumerated = polytope_bound(verts, body);
  Rational closed = Rational(n / 2) + 3;
  if (enumerated != closed)
    fail(Errc::aprime_mismatch, "enumerated bound " + rational_str(enumerated) +
                                    " differs from closed form " + rational_str(closed) +
                                    " at n = " + std::to_string(n));
  return enumerated;
}

namespace {

ScenarioFunctionals yo13_functionals() {
  ScenarioFunctionals pf;
  // Labels 1..9 at indices 0..8, A..D at 9..12.
  for (int i = 0; i < 9; ++i) pf.noncontextuality.add_linear(i, Rational(2));
  for (int i = 9; i < 13; ++i) pf.noncontextuality.add_linear(i, Rational(1));
  for (int i = 9; i < 13; ++i) pf.constraint.add_linear(i, Rational(1));
  const std::vector<std::vector<int>> a_cliques{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
  for (const auto& grp : a_cliques) pf.envelope_body.add_max_group(Rational(1, 3), grp);
  for (const auto& grp : a_cliques) pf.aprime_body.add_max_group(Rational(1), grp);
  for (int i = 9; i < 13; ++i) pf.aprime_body.add_linear(i, Rational(1));
  pf.a_contexts = {1, 2, 3};
  pf.operational_value = Scalar::exact(Rational(4, 3));
  pf.mixing_coefficient = Rational(1);
  return pf;
}

ScenarioFunctionals cycle_functionals(int n, bool kcbs_labels) {
  ScenarioFunctionals pf;
  // Cycle vertices 1..n at indices 0..n-1, completions at n..2n-1, with the
  // i-th completion vertex closing the (i, i+1) edge.
  for (int i = 0; i < n; ++i) pf.noncontextuality.add_linear(i, Rational(1));
  for (int i = 0; i < n; ++i) pf.constraint.add_linear(i, Rational(1));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> clique{i - 1, i % n, n + i - 1};
    pf.envelope_body.add_max_group(Rational(1, n), clique);
    pf.aprime_body.add_max_group(Rational(1, n), clique);
  }
  for (int i = 0; i < n; ++i) pf.aprime_body.add_linear(i, Rational(1));
  pf.aprime_body.set_constant(Rational(2));
  pf.a_contexts.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pf.a_contexts[static_cast<size_t>(i)] = i;
  if (kcbs_labels) {
    pf.operational_value = Scalar::surd(5);
    pf.mixing_coefficient = Rational(1, 3);
  }
  return pf;
}

}  // namespace

ScenarioFunctionals builtin_functionals(const std::string& scenario_name) {
  if (scenario_name == "yo13") return yo13_functionals();
  if (scenario_name == "kcbs") return cycle_functionals(5, true);
  for (const char* prefix : {"cycle(", "cycle:"}) {
    std::string pre(prefix);
    if (scenario_name.size() > pre.size() && scenario_name.compare(0, pre.size(), pre) == 0) {
      std::string arg = scenario_name.substr(pre.size());
      if (!arg.empty() && arg.back() == ')') arg.pop_back();
      try {
        int n = std::stoi(arg);
        if (n < 4) fail(Errc::bad_cycle_length, "cycle length must be >= 4");
        return cycle_functionals(n, false);
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        break;
      }
    }
  }
  fail(Errc::unknown_builtin, "no built-in scenario named \"" + scenario_name + "\"");
}

}  // namespace ksb
