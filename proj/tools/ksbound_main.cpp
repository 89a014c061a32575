// ksbound - exclusivity-graph noncontextuality bound workbench.
//
// Subcommands:
//   builtin <name> [--emit PATH]       export a built-in scenario
//   cliques <scenario>                 maximal cliques of the scenario graph
//   vertices <scenario> [--slice E]... [--count-only]
//   bound ks|polytope|conditional|onci|aprime <scenario> [--functional N] [--range A B]
//   quantum <scenario> [--functional N]
//   report <scenario>                  full pipeline with golden verdicts
//
// Exit codes: 0 success, 1 computational failure or failed verdict, 2 usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "ksbound/bounds.hpp"
#include "ksbound/error.hpp"
#include "ksbound/report.hpp"
#include "ksbound/scenario.hpp"
#include "ksbound/version.hpp"

using nlohmann::json;
using namespace ksb;

namespace {

struct GlobalOpts {
  std::string format = "json";
  std::uint64_t seed = 2016;
  std::string slice_limit = "v";

  PipelineOptions pipeline() const {
    PipelineOptions po;
    po.seed = seed;
    po.slice_limit = slice_limit == "r" ? SliceLimit::polytope_max : SliceLimit::operational_value;
    return po;
  }
};

json vertex_json(const std::vector<Label>& vars, const RfVertex& v) {
  json o = json::object();
  for (size_t i = 0; i < vars.size(); ++i) o[vars[i]] = rational_str(v.coords[i]);
  return o;
}

// SUM(a,b,c) >= p/q  |  SUM(a,b,c) <= p/q
SliceConstraint parse_slice_expr(const std::string& expr, const Scenario& s) {
  auto bad = [&](const std::string& why) -> SliceConstraint {
    fail(Errc::schema_violation, "bad slice expression \"" + expr + "\": " + why);
  };
  size_t open = expr.find("SUM(");
  if (open == std::string::npos) return bad("expected SUM(label,...)");
  size_t close = expr.find(')', open);
  if (close == std::string::npos) return bad("missing ')'");
  RatVec coeffs(static_cast<size_t>(s.graph.size()), Rational(0));
  std::string inner = expr.substr(open + 4, close - open - 4);
  size_t start = 0;
  while (start <= inner.size()) {
    size_t comma = inner.find(',', start);
    std::string label = inner.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
    while (!label.empty() && label.front() == ' ') label.erase(label.begin());
    while (!label.empty() && label.back() == ' ') label.pop_back();
    if (label.empty()) return bad("empty label");
    if (!s.graph.has_label(label)) return bad("unknown label \"" + label + "\"");
    coeffs[static_cast<size_t>(s.graph.index_of(label))] += 1;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::string rest = expr.substr(close + 1);
  size_t rel = rest.find_first_not_of(' ');
  if (rel == std::string::npos || rel + 1 >= rest.size()) return bad("missing relation");
  Relation relation;
  if (rest.compare(rel, 2, ">=") == 0)
    relation = Relation::greater_equal;
  else if (rest.compare(rel, 2, "<=") == 0)
    relation = Relation::less_equal;
  else
    return bad("relation must be >= or <=");
  std::string rhs = rest.substr(rel + 2);
  size_t f = rhs.find_first_not_of(' ');
  if (f == std::string::npos) return bad("missing right-hand side");
  size_t l = rhs.find_last_not_of(' ');
  return SliceConstraint{std::move(coeffs), relation, parse_rational(rhs.substr(f, l - f + 1))};
}

int cmd_builtin(const std::string& name, const std::string& emit) {
  Scenario s = builtin_scenario(name);
  std::string text = scenario_to_json(s) + "\n";
  if (emit.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(emit, std::ios::binary);
    if (!out.good()) fail(Errc::io_error, "cannot write \"" + emit + "\"");
    out << text;
  }
  return 0;
}

int cmd_cliques(const std::string& scenario, const GlobalOpts& g) {
  Scenario s = resolve_scenario(scenario);
  std::vector<Context> cliques = maximal_cliques(s.graph);
  if (g.format == "table") {
    for (const Context& c : cliques) {
      std::string line;
      for (int m : c.members) line += (line.empty() ? "" : " ") + s.graph.label(m);
      std::cout << line << "\n";
    }
  } else {
    json out = json::array();
    for (const Context& c : cliques) out.push_back(context_labels(s.graph, c));
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_vertices(const std::string& scenario, const std::vector<std::string>& slices,
                 bool count_only, const GlobalOpts& g) {
  Scenario s = resolve_scenario(scenario);
  HRepPolytope p = build_polytope(s.graph, s.contexts, s.dimension);
  std::vector<SliceConstraint> cuts;
  for (const std::string& expr : slices) cuts.push_back(parse_slice_expr(expr, s));
  if (!cuts.empty()) p = slice(p, cuts);
  std::vector<RfVertex> verts = enumerate_vertices(p);
  if (count_only) {
    std::cout << verts.size() << "\n";
    return 0;
  }
  if (g.format == "table") {
    std::string head;
    for (const Label& l : p.variables()) head += (head.empty() ? "" : "\t") + l;
    std::cout << head << "\n";
    for (const RfVertex& v : verts) {
      std::string line;
      for (const Rational& x : v.coords) line += (line.empty() ? "" : "\t") + rational_str(x);
      std::cout << line << "\n";
    }
  } else {
    json out;
    out["count"] = verts.size();
    out["labels"] = p.variables();
    json arr = json::array();
    for (const RfVertex& v : verts) arr.push_back(vertex_json(p.variables(), v));
    out["vertices"] = arr;
    if (verts.empty()) out["empty"] = true;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_bound(const std::string& kind, const std::string& scenario, std::string functional,
              const std::vector<std::string>& range, const GlobalOpts& g) {
  Scenario s = resolve_scenario(scenario);
  HRepPolytope p = build_polytope(s.graph, s.contexts, s.dimension);
  std::vector<RfVertex> verts = enumerate_vertices(p);

  auto named = [&](const std::string& fname) -> const Functional& {
    const Functional* f = s.find_functional(fname);
    if (!f) fail(Errc::missing_definition, "scenario has no functional \"" + fname + "\"");
    return *f;
  };
  auto print_rational = [&](const Rational& r) {
    if (g.format == "table")
      std::cout << rational_str(r) << "\n";
    else
      std::cout << json(rational_str(r)).dump() << "\n";
  };

  if (kind == "ks") {
    print_rational(ks_bound(verts, named(functional.empty() ? "I" : functional)));
    return 0;
  }
  if (kind == "polytope") {
    print_rational(polytope_bound(verts, named(functional.empty() ? "aprime" : functional)));
    return 0;
  }
  if (kind == "conditional") {
    if (range.size() != 2) fail(Errc::schema_violation, "conditional bound needs --range A B");
    const Functional& f = named("F");
    const Functional& t = named(functional.empty() ? "T" : functional);
    ConditionalMax cm =
        conditional_max(p, f, parse_rational(range[0]), parse_rational(range[1]), t);
    if (g.format == "table") {
      std::cout << rational_str(cm.value) << "\n";
    } else {
      json out{{"max", rational_str(cm.value)},
               {"witness", vertex_json(p.variables(), cm.witness)}};
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  }
  if (kind == "onci") {
    OnciSpec spec = make_onci_spec(s, p, verts, g.pipeline().slice_limit);
    BoundReport br = derive_onci_bound(spec);
    json samples = json::array();
    for (const EnvelopeSample& smp : br.samples)
      samples.push_back(json{{"a", rational_str(smp.threshold)},
                             {"max", rational_str(smp.max_value)},
                             {"witness", vertex_json(p.variables(), smp.witness)}});
    json out{{"bound", json::parse(format_double(br.bound))},
             {"a_star", json::parse(format_double(br.a_star))},
             {"envelope", json{{"alpha", rational_str(br.envelope.alpha)},
                               {"beta", rational_str(br.envelope.beta)}}},
             {"breakpoint", rational_str(br.breakpoint)},
             {"polytope_max", rational_str(br.polytope_max)},
             {"samples", samples},
             {"nontrivial", br.nontrivial},
             {"notes", br.notes}};
    if (g.format == "table") {
      std::cout << "bound " << format_double(br.bound) << "\n"
                << "a_star " << format_double(br.a_star) << "\n"
                << "envelope alpha=" << rational_str(br.envelope.alpha)
                << " beta=" << rational_str(br.envelope.beta) << "\n";
      for (const std::string& n : br.notes) std::cout << "note: " << n << "\n";
    } else {
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  }
  if (kind == "aprime") {
    const Functional& body = named("aprime");
    Rational value = polytope_bound(verts, body);
    print_rational(value);
    return 0;
  }
  fail(Errc::schema_violation, "unknown bound kind \"" + kind + "\"");
}

int cmd_quantum(const std::string& scenario, const std::string& functional, const GlobalOpts& g) {
  Scenario s = resolve_scenario(scenario);
  QuantumRealization qr = s.realization();
  Preparation prep = qr.maximally_mixed ? Preparation::mixed() : Preparation::distinguished();
  if (!functional.empty()) {
    const Functional* f = s.find_functional(functional);
    if (!f) fail(Errc::missing_definition, "scenario has no functional \"" + functional + "\"");
    std::cout << format_double(quantum_value(*f, qr, prep)) << "\n";
    return 0;
  }
  json out = json::object();
  RealizationReport ver = verify_realization(s.graph, qr);
  out["realization_pass"] = ver.pass();
  if (const Functional* i = s.find_functional("I"))
    out["I"] = json::parse(format_double(quantum_value(*i, qr, prep)));
  if (!s.a_contexts.empty()) {
    std::vector<Context> a_ctxs;
    for (int ci : s.a_contexts) a_ctxs.push_back(s.contexts[static_cast<size_t>(ci)]);
    out["A"] = json::parse(format_double(quantum_average_predictability(a_ctxs, qr)));
  }
  if (g.format == "table") {
    for (auto it = out.begin(); it != out.end(); ++it)
      std::cout << it.key() << " " << it.value().dump() << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return ver.pass() ? 0 : 1;
}

int cmd_report(const std::string& scenario, const GlobalOpts& g) {
  Scenario s = resolve_scenario(scenario);
  Report rep = run_pipeline(s, g.pipeline());
  if (g.format == "table") {
    json j = json::parse(rep.json());
    for (auto it = j["verdicts"].begin(); it != j["verdicts"].end(); ++it)
      std::cout << (it.value()["pass"].get<bool>() ? "PASS " : "FAIL ") << it.key()
                << " expected=" << it.value()["expected"].dump()
                << " actual=" << it.value()["actual"].dump() << "\n";
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
  } else {
    std::cout << rep.json() << "\n";
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exclusivity-graph noncontextuality bound workbench"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", g.seed, "seed for random-state checks");
  app.add_option("--slice-limit", g.slice_limit, "envelope slice upper limit")
      ->check(CLI::IsMember({"v", "r"}));

  std::string name, scenario, emit, functional, kind;
  std::vector<std::string> slices, range;
  bool count_only = false;

  // Global flags stay usable after the subcommand name.
  app.fallthrough();

  CLI::App* c_builtin = app.add_subcommand("builtin", "export a built-in scenario");
  c_builtin->add_option("name", name, "yo13 | kcbs | cycle:n")->required();
  c_builtin->add_option("--emit", emit, "output path (stdout when omitted)");

  CLI::App* c_cliques = app.add_subcommand("cliques", "maximal cliques of the scenario graph");
  c_cliques->add_option("scenario", scenario, "scenario file or built-in name")->required();

  CLI::App* c_vertices = app.add_subcommand("vertices", "enumerate polytope vertices");
  c_vertices->add_option("scenario", scenario)->required();
  c_vertices->add_option("--slice", slices, "extra constraint SUM(l,...) >=|<= p/q");
  c_vertices->add_flag("--count-only", count_only, "print only the vertex count");

  CLI::App* c_bound = app.add_subcommand("bound", "noncontextual bounds");
  c_bound->add_option("kind", kind, "ks | polytope | conditional | onci | aprime")
      ->required()
      ->check(CLI::IsMember({"ks", "polytope", "conditional", "onci", "aprime"}));
  c_bound->add_option("scenario", scenario)->required();
  c_bound->add_option("--functional", functional, "functional name from the scenario");
  c_bound->add_option("--range", range, "slice range A B (conditional)")->expected(2);

  CLI::App* c_quantum = app.add_subcommand("quantum", "quantum values of the realization");
  c_quantum->add_option("scenario", scenario)->required();
  c_quantum->add_option("--functional", functional, "functional name from the scenario");

  CLI::App* c_report = app.add_subcommand("report", "full pipeline with golden verdicts");
  c_report->add_option("scenario", scenario)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_builtin->parsed()) return cmd_builtin(name, emit);
    if (c_cliques->parsed()) return cmd_cliques(scenario, g);
    if (c_vertices->parsed()) return cmd_vertices(scenario, slices, count_only, g);
    if (c_bound->parsed()) return cmd_bound(kind, scenario, functional, range, g);
    if (c_quantum->parsed()) return cmd_quantum(scenario, functional, g);
    if (c_report->parsed()) return cmd_report(scenario, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
