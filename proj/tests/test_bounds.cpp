#include <doctest.h>

#include <cmath>

#include "ksbound/bounds.hpp"
#include "test_util.hpp"

using namespace ksb;

namespace {

struct Yo13 {
  ExclusivityGraph graph = builtin_graph("yo13");
  std::vector<Context> contexts = maximal_cliques(graph);
  HRepPolytope polytope = build_polytope(graph, contexts, 3);
  std::vector<RfVertex> vertices = enumerate_vertices(polytope);
  ScenarioFunctionals pf = builtin_functionals("yo13");
};

const Yo13& yo13() {
  static Yo13 fixture;
  return fixture;
}

struct Kcbs {
  ExclusivityGraph graph = builtin_graph("kcbs5-extended");
  std::vector<Context> contexts;
  ScenarioFunctionals pf = builtin_functionals("kcbs");
  Kcbs() {
    for (int i = 1; i <= 5; ++i) contexts.push_back(Context{{i - 1, i % 5, 5 + i - 1}});
  }
};

}  // namespace

TEST_CASE("ks bounds reproduce the deterministic-model values") {
  CHECK(ks_bound(yo13().vertices, yo13().pf.noncontextuality) == 7);

  Kcbs k;
  HRepPolytope p = build_polytope(k.graph, k.contexts, 3);
  std::vector<RfVertex> verts = enumerate_vertices(p);
  CHECK(ks_bound(verts, k.pf.noncontextuality) == 2);

  // simplex: a single linear coordinate has deterministic max 1
  ExclusivityGraph k3 =
      ExclusivityGraph::build({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  HRepPolytope sp = build_polytope(k3, maximal_cliques(k3), 3);
  Functional w1;
  w1.add_linear(0, Rational(1));
  CHECK(ks_bound(enumerate_vertices(sp), w1) == 1);

  // a KS inequality is linear by definition
  Functional grp;
  grp.add_max_group(Rational(1), {0, 1});
  CHECK_ERRC(ks_bound(verts, grp), Errc::max_group_in_linear_op);

  // slicing the pentagon sum to 5/2 leaves only the half-integral vertex
  RatVec pentagon_sum(10, Rational(0));
  for (int i = 0; i < 5; ++i) pentagon_sum[static_cast<size_t>(i)] = 1;
  HRepPolytope face =
      slice(p, {SliceConstraint{pentagon_sum, Relation::greater_equal, Rational(5, 2)}});
  std::vector<RfVertex> face_verts = enumerate_vertices(face);
  REQUIRE(face_verts.size() == 1);
  CHECK_ERRC(ks_bound(face_verts, k.pf.noncontextuality), Errc::empty_deterministic_set);
}

TEST_CASE("polytope bounds include indeterministic vertices") {
  CHECK(polytope_bound(yo13().vertices, yo13().pf.aprime_body) == 4);
  CHECK(polytope_bound(yo13().vertices, yo13().pf.constraint) == Rational(8, 3));

  // sum over one full context is pinned to 1 by the equality
  Functional ctx_sum;
  for (int m : yo13().contexts[0].members) ctx_sum.add_linear(m, Rational(1));
  CHECK(polytope_bound(yo13().vertices, ctx_sum) == 1);
}

TEST_CASE("conditional maxima match the sliced enumerations") {
  const Yo13& y = yo13();
  CHECK(conditional_max(y.polytope, y.pf.constraint, Rational(7, 6), Rational(4, 3),
                        y.pf.envelope_body)
            .value == Rational(17, 18));
  CHECK(conditional_max(y.polytope, y.pf.constraint, Rational(1), Rational(4, 3),
                        y.pf.envelope_body)
            .value == 1);
  // unrestricted slice equals the polytope bound
  CHECK(conditional_max(y.polytope, y.pf.constraint, Rational(0), Rational(8, 3),
                        y.pf.envelope_body)
            .value == polytope_bound(y.vertices, y.pf.envelope_body));

  CHECK_ERRC(conditional_max(y.polytope, y.pf.constraint, Rational(2), Rational(1),
                             y.pf.envelope_body),
             Errc::empty_slice);
  CHECK_ERRC(conditional_max(y.polytope, y.pf.constraint, Rational(3), Rational(4),
                             y.pf.envelope_body),
             Errc::empty_slice);
}

TEST_CASE("conditional max is monotone in the threshold") {
  const Yo13& y = yo13();
  Rational prev;
  bool first = true;
  for (Rational a : {Rational(1), Rational(9, 8), Rational(7, 6), Rational(5, 4), Rational(4, 3)}) {
    Rational m =
        conditional_max(y.polytope, y.pf.constraint, a, Rational(4, 3), y.pf.envelope_body).value;
    if (!first) CHECK(m <= prev);
    prev = m;
    first = false;
  }
}

TEST_CASE("scaling the envelope body scales the conditional max") {
  const Yo13& y = yo13();
  Functional scaled;
  for (const MaxGroup& g : y.pf.envelope_body.max_groups())
    scaled.add_max_group(g.coeff * 3, g.members);
  ConditionalMax base = conditional_max(y.polytope, y.pf.constraint, Rational(7, 6),
                                        Rational(4, 3), y.pf.envelope_body);
  ConditionalMax big =
      conditional_max(y.polytope, y.pf.constraint, Rational(7, 6), Rational(4, 3), scaled);
  CHECK(big.value == base.value * 3);
  CHECK(big.witness == base.witness);
}

TEST_CASE("envelope fits are exact") {
  Envelope e = fit_linear_envelope(
      {{Rational(1), Rational(1)}, {Rational(7, 6), Rational(17, 18)}, {Rational(4, 3), Rational(8, 9)}});
  CHECK(e.alpha == Rational(4, 3));
  CHECK(e.beta == Rational(1, 3));

  Envelope k = fit_linear_envelope({{Rational(2), Rational(1)},
                                    {Rational(17, 8), Rational(17, 20)},
                                    {Rational(161, 72), Rational(43, 60)}});
  CHECK(k.alpha == Rational(17, 5));
  CHECK(k.beta == Rational(6, 5));

  Envelope c = fit_linear_envelope(
      {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(2), Rational(1)}});
  CHECK(c.alpha == 1);
  CHECK(c.beta == 0);

  CHECK_ERRC(fit_linear_envelope({{Rational(0), Rational(1)}, {Rational(1), Rational(1)}}),
             Errc::bad_envelope_samples);
  CHECK_ERRC(fit_linear_envelope({{Rational(0), Rational(1)},
                                  {Rational(0), Rational(2)},
                                  {Rational(1), Rational(1)}}),
             Errc::bad_envelope_samples);
  CHECK_ERRC(fit_linear_envelope({{Rational(0), Rational(1)},
                                  {Rational(1), Rational(2)},
                                  {Rational(2), Rational(1)}}),
             Errc::envelope_above_line);
  CHECK_ERRC(fit_linear_envelope({{Rational(0), Rational(1)},
                                  {Rational(1), Rational(0)},
                                  {Rational(2), Rational(1)}}),
             Errc::envelope_not_collinear);
}

TEST_CASE("deterministic bounds never exceed polytope bounds") {
  const Yo13& y = yo13();
  std::vector<Functional> fs;
  fs.push_back(y.pf.noncontextuality);
  fs.push_back(y.pf.constraint);
  Functional mixed;
  mixed.add_linear(0, Rational(3));
  mixed.add_linear(9, Rational(-1));
  mixed.add_linear(5, Rational(1, 2));
  fs.push_back(std::move(mixed));
  for (const Functional& f : fs) CHECK(ks_bound(y.vertices, f) <= polytope_bound(y.vertices, f));
}

TEST_CASE("measure lower bound") {
  CHECK(measure_lower_bound(4.0 / 3.0, 7.0 / 6.0, 8.0 / 3.0) == doctest::Approx(1.0 / 9.0));
  CHECK(measure_lower_bound(1.5, 1.5, 2.0) == 0.0);
  CHECK(measure_lower_bound(std::sqrt(5.0), 2.0, 2.5) ==
        doctest::Approx(2.0 * std::sqrt(5.0) - 4.0).epsilon(1e-12));
  CHECK_ERRC(measure_lower_bound(1.0, 2.0, 2.0), Errc::division_by_zero);
}

TEST_CASE("default interior threshold keeps small denominators") {
  CHECK(default_interior_threshold(Rational(1), Rational(4, 3)) == Rational(7, 6));
  CHECK(default_interior_threshold(Rational(2), Rational(161, 72)) == Rational(17, 8));
  CHECK(default_interior_threshold(Rational(0), Rational(1)) == Rational(1, 2));
}

TEST_CASE("yo13 measure-bound pipeline hits the closed form") {
  const Yo13& y = yo13();
  auto [r, witness] = max_functional(y.vertices, y.pf.constraint);
  OnciSpec spec{y.polytope,
                y.pf.constraint,
                *y.pf.operational_value,
                r,
                witness,
                *y.pf.mixing_coefficient,
                y.pf.envelope_body,
                {Rational(1), Rational(7, 6), Rational(4, 3)},
                Rational(4, 3),
                {}};
  BoundReport br = derive_onci_bound(spec);
  double s5 = std::sqrt(5.0);
  CHECK(br.bound == doctest::Approx(4.0 * s5 / 9.0).epsilon(1e-12));
  CHECK(br.a_star == doctest::Approx((8.0 - 2.0 * s5) / 3.0).epsilon(1e-12));
  CHECK(br.envelope.alpha == Rational(4, 3));
  CHECK(br.envelope.beta == Rational(1, 3));
  CHECK(br.breakpoint == 1);
  CHECK(br.nontrivial);
  REQUIRE(br.samples.size() == 3);
  CHECK(br.samples[1].max_value == Rational(17, 18));

  // every sampled threshold gives a valid upper-bound certificate
  double v = 4.0 / 3.0, rr = 8.0 / 3.0, p = 1.0;
  for (const EnvelopeSample& s : br.samples) {
    double a = to_double(s.threshold);
    if (a <= p || a >= v) continue;
    double cert = 1.0 - (1.0 / 3.0) * (a - p) * (v - a) / (rr - a);
    CHECK(br.bound <= cert + 1e-15);
  }
}

TEST_CASE("a breakpoint at the operational value leaves no violation region") {
  const Yo13& y = yo13();
  auto [r, witness] = max_functional(y.vertices, y.pf.constraint);
  // operational value 1 equals the envelope breakpoint
  OnciSpec spec{y.polytope,
                y.pf.constraint,
                Scalar::exact(Rational(1)),
                r,
                witness,
                Rational(1),
                y.pf.envelope_body,
                {Rational(1), Rational(7, 6), Rational(4, 3)},
                Rational(4, 3),
                {}};
  BoundReport br = derive_onci_bound(spec);
  CHECK(br.bound == 1.0);
  CHECK(!br.nontrivial);
}

TEST_CASE("n-cycle bounds match the closed form") {
  CHECK(ncycle_aprime_bound(4) == 5);
  CHECK(ncycle_aprime_bound(5) == 5);
  CHECK(ncycle_aprime_bound(7) == 6);
  CHECK_ERRC(ncycle_aprime_bound(3), Errc::bad_cycle_length);
}

TEST_CASE("builtin functionals are wired to the right labels") {
  const ScenarioFunctionals& pf = yo13().pf;
  CHECK(pf.noncontextuality.linear().size() == 13);
  Rational sum = 0;
  for (const auto& [idx, c] : pf.noncontextuality.linear()) sum += c;
  CHECK(sum == 22);  // 2*9 + 4
  CHECK(pf.constraint.linear().size() == 4);
  CHECK(pf.envelope_body.max_groups().size() == 3);
  CHECK(pf.aprime_body.max_groups().size() == 3);
  CHECK(pf.a_contexts == std::vector<int>{1, 2, 3});
  CHECK(pf.operational_value->str() == "4/3");

  ScenarioFunctionals kc = builtin_functionals("kcbs");
  CHECK(kc.noncontextuality.linear().size() == 5);
  CHECK(kc.operational_value->str() == "sqrt(5)");
  CHECK(*kc.mixing_coefficient == Rational(1, 3));

  ScenarioFunctionals cyc = builtin_functionals("cycle(7)");
  CHECK(cyc.aprime_body.constant() == 2);
  CHECK(!cyc.operational_value.has_value());

  CHECK_ERRC(builtin_functionals("unknown"), Errc::unknown_builtin);
}
