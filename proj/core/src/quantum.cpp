#include "ksbound/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ksbound/error.hpp"

namespace ksb {

namespace {

constexpr double kOrthTol = 1e-9;
constexpr double kNormTol = 1e-12;

}  // namespace

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "dot of vectors of unequal length");
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec normalized(Vec a) {
  double n = norm(a);
  if (n == 0) fail(Errc::realization_invalid, "cannot normalize the zero vector");
  for (double& x : a) x /= n;
  return a;
}

Vec cross3(const Vec& a, const Vec& b) {
  if (a.size() != 3 || b.size() != 3)
    fail(Errc::dimension_mismatch, "cross product requires dimension 3");
  Vec c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  c = normalized(std::move(c));
  for (double x : c) {
    if (std::abs(x) > kOrthTol) {
      if (x < 0)
        for (double& y : c) y = -y;
      break;
    }
  }
  return c;
}

double outcome_probability(const QuantumRealization& r, int var, const Preparation& prep) {
  const Vec& v = r.vectors[static_cast<size_t>(var)];
  switch (prep.kind) {
    case Preparation::Kind::maximally_mixed:
      return 1.0 / r.dim;
    case Preparation::Kind::psi:
      if (!r.psi) fail(Errc::missing_definition, "realization has no distinguished state");
      return dot(*r.psi, v) * dot(*r.psi, v);
    case Preparation::Kind::pure: {
      double a = dot(prep.state, v);
      return a * a;
    }
  }
  return 0;
}

namespace {

// Umbrella rays: v_j = (cos t, sin t cos(j s), sin t sin(j s)) with
// cos^2 t = cos(pi/n) / (1 + cos(pi/n)) and step s = pi (n-1)/n closes the
// odd cycle orthogonally.
std::vector<Vec> umbrella_rays(int n) {
  if (n % 2 == 0)
    fail(Errc::realization_invalid, "umbrella construction is defined for odd cycles only");
  double cp = std::cos(M_PI / n);
  double cos_theta = std::sqrt(cp / (1 + cp));
  double sin_theta = std::sqrt(1 - cp / (1 + cp));
  double step = M_PI * (n - 1) / n;
  std::vector<Vec> rays;
  for (int j = 0; j < n; ++j)
    rays.push_back(Vec{cos_theta, sin_theta * std::cos(j * step), sin_theta * std::sin(j * step)});
  return rays;
}

QuantumRealization cycle_extended_realization(int n) {
  QuantumRealization r;
  r.dim = 3;
  std::vector<Vec> cycle;
  if (n % 2 == 1) {
    cycle = umbrella_rays(n);
    r.psi = Vec{1, 0, 0};
  } else {
    for (int j = 0; j < n; ++j)
      cycle.push_back(j % 2 == 0 ? Vec{1, 0, 0} : Vec{0, 1, 0});
    r.psi = normalized(Vec{1, 1, 0});
  }
  r.vectors = cycle;
  for (int i = 0; i < n; ++i)
    r.vectors.push_back(cross3(cycle[static_cast<size_t>(i)], cycle[static_cast<size_t>((i + 1) % n)]));
  return r;
}

QuantumRealization yo13_realization() {
  QuantumRealization r;
  r.dim = 3;
  r.maximally_mixed = true;
  const std::vector<Vec> raw{
      {1, 0, 0},  {0, 1, 0},  {0, 0, 1},            // 1, 2, 3
      {0, 1, -1}, {-1, 0, 1}, {1, -1, 0},           // 4, 5, 6
      {0, 1, 1},  {1, 0, 1},  {1, 1, 0},            // 7, 8, 9
      {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1} // A, B, C, D
  };
  for (const Vec& v : raw) r.vectors.push_back(normalized(v));
  return r;
}

}  // namespace

QuantumRealization builtin_realization(const std::string& name) {
  QuantumRealization r;
  if (name == "yo13") {
    r = yo13_realization();
  } else if (name == "kcbs5-extended") {
    r = cycle_extended_realization(5);
  } else {
    int n = 0;
    bool ok = false;
    for (const char* prefix : {"cycle-extended(", "cycle-extended:"}) {
      std::string pre(prefix);
      if (name.size() > pre.size() && name.compare(0, pre.size(), pre) == 0) {
        std::string arg = name.substr(pre.size());
        if (!arg.empty() && arg.back() == ')') arg.pop_back();
        try {
          n = std::stoi(arg);
          ok = true;
        } catch (const std::exception&) {
        }
        break;
      }
    }
    if (!ok) fail(Errc::unknown_builtin, "no built-in realization named \"" + name + "\"");
    if (n < 4) fail(Errc::bad_cycle_length, "cycle length must be >= 4");
    r = cycle_extended_realization(n);
  }

  ExclusivityGraph g = builtin_graph(name);
  if (name == "yo13") {
    // The label assignment is only trusted if the orthogonality graph
    // reproduces the clique structure exactly, non-edges included.
    for (int i = 0; i < g.size(); ++i)
      for (int j = i + 1; j < g.size(); ++j) {
        double d = std::abs(dot(r.vectors[static_cast<size_t>(i)], r.vectors[static_cast<size_t>(j)]));
        if (g.adjacent(i, j) ? d >= kOrthTol : d < kOrthTol)
          fail(Errc::realization_invalid,
               "yo13 ray assignment mismatches the exclusivity graph at (" + g.label(i) + ", " +
                   g.label(j) + ")");
      }
  }

  RealizationReport check = verify_realization(g, r);
  if (!check.pass())
    fail(Errc::realization_invalid,
         "built-in realization \"" + name + "\" fails verification: " + check.failures.front());
  return r;
}

RealizationReport verify_realization(const ExclusivityGraph& g, const QuantumRealization& r) {
  RealizationReport rep;
  if (static_cast<int>(r.vectors.size()) != g.size())
    fail(Errc::missing_definition, "realization must provide one vector per graph label");
  for (int i = 0; i < g.size(); ++i) {
    ++rep.norm_checks;
    double n = norm(r.vectors[static_cast<size_t>(i)]);
    if (std::abs(n - 1.0) > kNormTol)
      rep.failures.push_back("vector \"" + g.label(i) + "\" has norm " + std::to_string(n));
  }
  for (auto [i, j] : g.edges()) {
    ++rep.orthogonality_checks;
    double d = dot(r.vectors[static_cast<size_t>(i)], r.vectors[static_cast<size_t>(j)]);
    if (std::abs(d) >= kOrthTol)
      rep.failures.push_back("edge (" + g.label(i) + ", " + g.label(j) +
                             ") is not orthogonal: dot = " + std::to_string(d));
  }
  for (const Context& c : maximal_cliques(g)) {
    if (static_cast<int>(c.members.size()) != r.dim) continue;
    ++rep.completeness_checks;
    double worst = 0;
    for (int row = 0; row < r.dim; ++row)
      for (int col = 0; col < r.dim; ++col) {
        double s = 0;
        for (int m : c.members) {
          const Vec& v = r.vectors[static_cast<size_t>(m)];
          s += v[static_cast<size_t>(row)] * v[static_cast<size_t>(col)];
        }
        worst = std::max(worst, std::abs(s - (row == col ? 1.0 : 0.0)));
      }
    if (worst > kNormTol) {
      std::string members;
      for (int m : c.members) members += (members.empty() ? "" : ",") + g.label(m);
      rep.failures.push_back("context (" + members + ") projectors do not sum to identity; " +
                             "deviation " + std::to_string(worst));
    }
  }
  return rep;
}

double quantum_value(const Functional& f, const QuantumRealization& r, const Preparation& prep) {
  if (!f.is_linear())
    fail(Errc::max_group_in_linear_op, "quantum value of a max-group is undefined");
  double v = to_double(f.constant());
  for (const auto& [var, coeff] : f.linear())
    v += to_double(coeff) * outcome_probability(r, var, prep);
  return v;
}

OperationalStats operational_stats(const QuantumRealization& r,
                                   const std::vector<Context>& contexts, const Preparation& prep,
                                   std::string tag) {
  OperationalStats stats;
  stats.preparation = std::move(tag);
  for (const Context& c : contexts) {
    std::vector<double> probs;
    probs.reserve(c.members.size());
    for (int m : c.members) probs.push_back(outcome_probability(r, m, prep));
    stats.probabilities.push_back(std::move(probs));
  }
  return stats;
}

double quantum_average_predictability(const std::vector<Context>& contexts,
                                      const QuantumRealization& r) {
  if (contexts.empty()) fail(Errc::missing_definition, "no contexts define the A quantity");
  double total = 0;
  int terms = 0;
  for (const Context& c : contexts)
    for (int m : c.members) {
      // Eigenstate preparation: P_{i,k} is the vertex's own projector.
      total += outcome_probability(r, m, Preparation::pure(r.vectors[static_cast<size_t>(m)]));
      ++terms;
    }
  return total / terms;
}

OnciValues quantum_onci_values(const AprimeDefinition& def, const QuantumRealization& r) {
  OnciValues out;
  out.a = quantum_average_predictability(def.a_contexts, r);

  double second = 0;
  switch (def.mode) {
    case AprimeDefinition::Mode::mixed_state_term: {
      if (def.terms.empty()) fail(Errc::missing_definition, "A' has no mixed-state terms");
      for (const auto& [ctx, k] : def.terms) {
        if (k < 1 || k > static_cast<int>(ctx.members.size()))
          fail(Errc::bad_index, "A' term outcome index out of range");
        second += outcome_probability(r, ctx.members[static_cast<size_t>(k - 1)],
                                      Preparation::mixed());
      }
      break;
    }
    case AprimeDefinition::Mode::plus_i:
      second = quantum_value(def.inequality, r, def.inequality_prep);
      break;
  }
  out.a_prime = 3 * out.a + second;
  return out;
}

UniformAverageReport verify_uniform_average(const std::vector<Context>& full_contexts,
                                            const QuantumRealization& r) {
  UniformAverageReport rep;
  for (const Context& c : full_contexts) {
    if (static_cast<int>(c.members.size()) != r.dim)
      fail(Errc::non_clique_context, "uniform-average check needs full contexts");
    ++rep.contexts_checked;
    double worst = 0;
    for (int row = 0; row < r.dim; ++row)
      for (int col = 0; col < r.dim; ++col) {
        double s = 0;
        for (int m : c.members) {
          const Vec& v = r.vectors[static_cast<size_t>(m)];
          s += v[static_cast<size_t>(row)] * v[static_cast<size_t>(col)] / r.dim;
        }
        double target = row == col ? 1.0 / r.dim : 0.0;
        worst = std::max(worst, std::abs(s - target));
      }
    rep.max_deviation = std::max(rep.max_deviation, worst);
    if (worst > kNormTol)
      rep.failures.push_back("average preparation of context " +
                             std::to_string(rep.contexts_checked) +
                             " deviates from maximally mixed by " + std::to_string(worst));
  }
  return rep;
}

std::vector<Vec> random_pure_states(std::uint64_t seed, int count, int dim) {
  std::mt19937_64 rng(seed);
  // Explicit uniform/Box-Muller mapping; std distributions are not
  // implementation-stable.
  auto uniform = [&rng]() {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  std::vector<Vec> states;
  states.reserve(static_cast<size_t>(count));
  while (static_cast<int>(states.size()) < count) {
    Vec v(static_cast<size_t>(dim));
    for (int i = 0; i < dim; i += 2) {
      double u1 = uniform(), u2 = uniform();
      double radius = std::sqrt(-2.0 * std::log(u1));
      v[static_cast<size_t>(i)] = radius * std::cos(2 * M_PI * u2);
      if (i + 1 < dim) v[static_cast<size_t>(i + 1)] = radius * std::sin(2 * M_PI * u2);
    }
    if (norm(v) < 1e-6) continue;
    states.push_back(normalized(std::move(v)));
  }
  return states;
}

}  // namespace ksb
