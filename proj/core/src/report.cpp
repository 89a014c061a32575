#include "ksbound/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "ksbound/bounds.hpp"
#include "ksbound/error.hpp"
#include "ksbound/version.hpp"

namespace ksb {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

// Floats are rounded to 12 significant digits before they enter a report;
// serialization is then byte-stable.
json j_double(double x) { return json::parse(format_double(x)); }

json j_vertex(const std::vector<Label>& vars, const RfVertex& v) {
  json o = json::object();
  for (size_t i = 0; i < vars.size(); ++i) o[vars[i]] = rational_str(v.coords[i]);
  return o;
}

json constraint_rows(const std::vector<Label>& vars, const std::vector<LinearConstraint>& rows,
                     const char* relation) {
  json arr = json::array();
  for (const auto& row : rows) {
    json terms = json::object();
    for (size_t i = 0; i < vars.size(); ++i)
      if (row.coeffs[i] != 0) terms[vars[i]] = rational_str(row.coeffs[i]);
    arr.push_back(json{{"terms", terms}, {"relation", relation}, {"rhs", rational_str(row.rhs)}});
  }
  return arr;
}

/// Actual value produced by a pipeline step, comparable against a golden
/// entry either exactly or numerically.
struct ActualValue {
  std::optional<Rational> exact;
  double num = 0.0;

  static ActualValue from(Rational r) {
    ActualValue a;
    a.num = to_double(r);
    a.exact = std::move(r);
    return a;
  }
  static ActualValue from(double d) {
    ActualValue a;
    a.num = d;
    return a;
  }
  std::string render() const { return exact ? rational_str(*exact) : format_double(num); }
};

}  // namespace

OnciSpec make_onci_spec(const Scenario& s, const HRepPolytope& polytope,
                        const std::vector<RfVertex>& vertices, SliceLimit slice_limit) {
  if (!s.constraint) fail(Errc::missing_definition, "scenario declares no constraint");
  const Functional* f = s.find_functional("F");
  const Functional* t = s.find_functional("T");
  if (!f || !t) fail(Errc::missing_definition, "constraint pipeline needs F and T");

  auto [r, r_witness] = max_functional(vertices, *f);
  OnciSpec spec{polytope,
                *f,
                s.constraint->value,
                r,
                r_witness,
                s.constraint->mixing_coefficient,
                *t,
                {},
                Rational(0),
                s.notes};
  spec.slice_limit = slice_limit == SliceLimit::polytope_max
                         ? r
                         : s.constraint->value.upper_rational();
  if (!s.constraint->value.is_exact())
    spec.notes.push_back("slice upper limit uses the rational over-approximation " +
                         rational_str(s.constraint->value.upper_rational()) + " of " +
                         s.constraint->value.str());
  if (slice_limit == SliceLimit::polytope_max)
    spec.notes.push_back("slice upper limit extended to the polytope maximum");

  Rational lo = ks_bound(vertices, *f);
  Rational mid = default_interior_threshold(lo, spec.slice_limit);
  spec.thresholds = {lo, mid, spec.slice_limit};
  return spec;
}

Report run_pipeline(const Scenario& s, const PipelineOptions& opts) {
  json steps = json::object();
  std::map<std::string, ActualValue> actuals;
  bool pass = true;

  auto tag_errors = [](const char* tag, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw Error(e.code(), std::string("[") + tag + "] " + e.what());
    }
  };

  // ---- cliques ----
  std::vector<Context> cliques;
  tag_errors("cliques", [&] {
    cliques = maximal_cliques(s.graph);
    json list = json::array();
    for (const Context& c : cliques) list.push_back(context_labels(s.graph, c));
    std::set<std::vector<int>> clique_sets, context_sets;
    for (const Context& c : cliques) clique_sets.insert(c.members);
    for (Context c : s.contexts) {
      std::sort(c.members.begin(), c.members.end());
      context_sets.insert(c.members);
    }
    steps["cliques"] = json{{"count", cliques.size()},
                            {"list", list},
                            {"matches_contexts", clique_sets == context_sets}};
    actuals.emplace("clique_count", ActualValue::from(Rational(cliques.size())));
  });

  // ---- polytope ----
  std::optional<HRepPolytope> polytope;
  tag_errors("polytope", [&] {
    polytope = build_polytope(s.graph, s.contexts, s.dimension);
    steps["polytope"] = json{
        {"variables", polytope->variables()},
        {"equalities", constraint_rows(polytope->variables(), polytope->equalities(), "=")},
        {"inequalities", constraint_rows(polytope->variables(), polytope->inequalities(), "<=")}};
  });

  // ---- vertices ----
  std::vector<RfVertex> vertices;
  tag_errors("vertices", [&] {
    vertices = enumerate_vertices(*polytope);
    size_t det = deterministic_vertices(vertices).size();
    steps["vertices"] = json{{"count", vertices.size()}, {"deterministic_count", det}};
    actuals.emplace("vertex_count", ActualValue::from(Rational(vertices.size())));
    actuals.emplace("deterministic_vertex_count", ActualValue::from(Rational(det)));
  });

  // ---- bounds ----
  tag_errors("bounds", [&] {
    json bounds = json::object();
    if (const Functional* i = s.find_functional("I")) {
      Rational ks = ks_bound(vertices, *i);
      bounds["ks"] = json{{"I", rational_str(ks)}};
      actuals.emplace("ks_I", ActualValue::from(ks));
    }
    if (const Functional* ap = s.find_functional("aprime")) {
      auto [val, wit] = max_functional(vertices, *ap);
      bounds["polytope"] =
          json{{"aprime", rational_str(val)}, {"witness", j_vertex(polytope->variables(), wit)}};
      actuals.emplace("aprime_bound", ActualValue::from(val));
    }
    if (!bounds.empty()) steps["bounds"] = bounds;
  });

  // ---- measure-theoretic bound ----
  if (s.constraint) {
    tag_errors("onci", [&] {
      OnciSpec spec = make_onci_spec(s, *polytope, vertices, opts.slice_limit);
      actuals.emplace("f_max", ActualValue::from(spec.polytope_max));

      BoundReport br = derive_onci_bound(spec);
      json samples = json::array();
      for (const EnvelopeSample& smp : br.samples)
        samples.push_back(json{{"a", rational_str(smp.threshold)},
                               {"max", rational_str(smp.max_value)},
                               {"witness", j_vertex(polytope->variables(), smp.witness)}});
      steps["onci"] = json{
          {"bound", j_double(br.bound)},
          {"a_star", j_double(br.a_star)},
          {"envelope", json{{"alpha", rational_str(br.envelope.alpha)},
                            {"beta", rational_str(br.envelope.beta)}}},
          {"breakpoint", rational_str(br.breakpoint)},
          {"polytope_max", rational_str(br.polytope_max)},
          {"polytope_max_witness", j_vertex(polytope->variables(), br.polytope_max_witness)},
          {"operational_value", s.constraint->value.str()},
          {"mixing_coefficient", rational_str(s.constraint->mixing_coefficient)},
          {"samples", samples},
          {"nontrivial", br.nontrivial},
          {"notes", br.notes}};
      actuals.emplace("onci_bound", ActualValue::from(br.bound));
      actuals.emplace("a_star", ActualValue::from(br.a_star));
      actuals.emplace("envelope_alpha", ActualValue::from(br.envelope.alpha));
      actuals.emplace("envelope_beta", ActualValue::from(br.envelope.beta));
    });
  }

  // ---- quantum ----
  if (s.quantum) {
    tag_errors("quantum", [&] {
      QuantumRealization qr = s.realization();
      json q = json::object();

      RealizationReport ver = verify_realization(s.graph, qr);
      q["realization"] = json{{"pass", ver.pass()},
                              {"norm_checks", ver.norm_checks},
                              {"orthogonality_checks", ver.orthogonality_checks},
                              {"completeness_checks", ver.completeness_checks},
                              {"failures", ver.failures}};
      if (!ver.pass()) pass = false;

      Preparation prep = qr.maximally_mixed ? Preparation::mixed() : Preparation::distinguished();
      if (const Functional* i = s.find_functional("I")) {
        double value = quantum_value(*i, qr, prep);
        q["I"] = j_double(value);
        actuals.emplace("quantum_I", ActualValue::from(value));

        if (qr.maximally_mixed) {
          // State independence: the functional's operator must be a multiple
          // of the identity; sampled states cross-check the identity.
          int d = qr.dim;
          std::vector<std::vector<double>> op(static_cast<size_t>(d),
                                              std::vector<double>(static_cast<size_t>(d), 0.0));
          for (const auto& [var, coeff] : i->linear()) {
            const Vec& v = qr.vectors[static_cast<size_t>(var)];
            for (int a = 0; a < d; ++a)
              for (int b = 0; b < d; ++b)
                op[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
                    to_double(coeff) * v[static_cast<size_t>(a)] * v[static_cast<size_t>(b)];
          }
          double lambda = 0;
          for (int a = 0; a < d; ++a) lambda += op[static_cast<size_t>(a)][static_cast<size_t>(a)];
          lambda /= d;
          double op_dev = 0;
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
              op_dev = std::max(op_dev, std::abs(op[static_cast<size_t>(a)][static_cast<size_t>(b)] -
                                                 (a == b ? lambda : 0.0)));
          double state_dev = 0;
          for (const Vec& psi : random_pure_states(opts.seed, opts.random_state_trials, d))
            state_dev = std::max(state_dev,
                                 std::abs(quantum_value(*i, qr, Preparation::pure(psi)) -
                                          to_double(i->constant()) - lambda));
          q["state_independence"] = json{{"operator_deviation", j_double(op_dev)},
                                         {"trials", opts.random_state_trials},
                                         {"seed", opts.seed},
                                         {"max_deviation", j_double(state_dev)},
                                         {"holds", op_dev < 1e-12}};
        }
      }

      if (s.constraint) {
        // Constraint projectors summing to v * identity makes the
        // operational value state-independent; report either way.
        int d = qr.dim;
        double v_target = s.constraint->value.value();
        double dev = 0;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            double sum = 0;
            for (const Label& l : s.constraint->labels) {
              const Vec& vec = qr.vectors[static_cast<size_t>(s.graph.index_of(l))];
              sum += vec[static_cast<size_t>(a)] * vec[static_cast<size_t>(b)];
            }
            double target = a == b ? v_target : 0.0;
            dev = std::max(dev, std::abs(sum - target));
          }
        q["constraint_operator"] = json{{"max_deviation", j_double(dev)}, {"holds", dev < 1e-12}};
      }

      if (!s.a_contexts.empty()) {
        std::vector<Context> a_ctxs;
        for (int ci : s.a_contexts) a_ctxs.push_back(s.contexts[static_cast<size_t>(ci)]);
        double a_value = quantum_average_predictability(a_ctxs, qr);
        q["A"] = j_double(a_value);
        actuals.emplace("quantum_A", ActualValue::from(a_value));

        if (s.aprime) {
          AprimeDefinition def;
          def.a_contexts = a_ctxs;
          if (s.aprime->mode == AprimeSpec::Mode::mixed_state_term) {
            def.mode = AprimeDefinition::Mode::mixed_state_term;
            for (auto [ctx, k] : s.aprime->terms)
              def.terms.emplace_back(s.contexts[static_cast<size_t>(ctx)], k);
          } else {
            def.mode = AprimeDefinition::Mode::plus_i;
            const Functional* i = s.find_functional("I");
            if (!i) fail(Errc::missing_definition, "plus_I A' needs the functional I");
            def.inequality = *i;
            def.inequality_prep = prep;
          }
          OnciValues ov = quantum_onci_values(def, qr);
          q["A_prime"] = j_double(ov.a_prime);
          actuals.emplace("quantum_Aprime", ActualValue::from(ov.a_prime));
        }
      }

      UniformAverageReport ua = verify_uniform_average(s.full_contexts(), qr);
      q["uniform_average"] = json{{"contexts_checked", ua.contexts_checked},
                                  {"max_deviation", j_double(ua.max_deviation)},
                                  {"pass", ua.pass()}};
      if (!ua.pass()) pass = false;

      steps["quantum"] = q;
    });
  }

  // ---- verdicts ----
  json verdicts = json::object();
  for (const auto& [key, golden] : s.golden) {
    json v;
    v["expected"] = golden.render();
    v["tol"] = golden.tol;
    auto it = actuals.find(key);
    if (it == actuals.end()) {
      v["actual"] = nullptr;
      v["pass"] = false;
      pass = false;
    } else {
      v["actual"] = it->second.render();
      bool ok;
      if (golden.is_exact() && golden.tol == 0.0 && it->second.exact)
        ok = std::get<Rational>(golden.value) == *it->second.exact;
      else
        ok = std::abs(it->second.num - golden.as_double()) <= golden.tol;
      v["pass"] = ok;
      if (!ok) pass = false;
    }
    verdicts[key] = v;
  }

  json top;
  top["version"] = kVersion;
  top["options"] = json{
      {"slice_limit", opts.slice_limit == SliceLimit::operational_value ? "v" : "r"},
      {"seed", opts.seed},
      {"random_state_trials", opts.random_state_trials}};
  top["scenario"] = json::parse(scenario_to_json(s));
  top["steps"] = steps;
  top["verdicts"] = verdicts;
  top["pass"] = pass;
  return Report(top.dump(2), pass);
}

}  // namespace ksb
