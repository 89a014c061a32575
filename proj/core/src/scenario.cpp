#include "ksbound/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ksbound/bounds.hpp"
#include "ksbound/error.hpp"
#include "ksbound/report.hpp"

namespace ksb {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& ptr, const std::string& msg) {
  fail(Errc::schema_violation, msg + " (at " + ptr + ")");
}

const json& need(const json& j, const char* key, const std::string& ptr) {
  auto it = j.find(key);
  if (it == j.end()) bad(ptr, "missing key \"" + std::string(key) + "\"");
  return *it;
}

std::string need_string(const json& j, const char* key, const std::string& ptr) {
  const json& v = need(j, key, ptr);
  if (!v.is_string()) bad(ptr + "/" + key, "expected a string");
  return v.get<std::string>();
}

Rational rational_at(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) bad(ptr, "expected a rational as \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    bad(ptr, e.what());
  }
}

Vec vec_at(const json& v, int dim, const std::string& ptr) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    bad(ptr, "expected an array of " + std::to_string(dim) + " numbers");
  Vec out;
  for (const json& x : v) {
    if (!x.is_number()) bad(ptr, "expected numeric components");
    out.push_back(x.get<double>());
  }
  return out;
}

const std::vector<std::string>& golden_keys() {
  static const std::vector<std::string> keys{
      "a_star",        "aprime_bound", "clique_count",  "deterministic_vertex_count",
      "envelope_alpha", "envelope_beta", "f_max",        "ks_I",
      "onci_bound",    "quantum_A",    "quantum_Aprime", "quantum_I",
      "vertex_count"};
  return keys;
}

Functional parse_functional(const json& j, const ExclusivityGraph& g, const std::string& ptr) {
  Functional f;
  if (j.contains("constant")) f.set_constant(rational_at(j.at("constant"), ptr + "/constant"));
  if (j.contains("linear")) {
    const json& lin = j.at("linear");
    if (!lin.is_object()) bad(ptr + "/linear", "expected an object of label -> coefficient");
    for (auto it = lin.begin(); it != lin.end(); ++it) {
      if (!g.has_label(it.key())) bad(ptr + "/linear/" + it.key(), "unknown label");
      f.add_linear(g.index_of(it.key()), rational_at(it.value(), ptr + "/linear/" + it.key()));
    }
  }
  if (j.contains("max_groups")) {
    const json& groups = j.at("max_groups");
    if (!groups.is_array()) bad(ptr + "/max_groups", "expected an array");
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      std::string gptr = ptr + "/max_groups/" + std::to_string(gi);
      const json& grp = groups[gi];
      Rational coeff = rational_at(need(grp, "coeff", gptr), gptr + "/coeff");
      const json& labels = need(grp, "labels", gptr);
      if (!labels.is_array() || labels.empty()) bad(gptr + "/labels", "expected a label array");
      std::vector<int> members;
      for (const json& l : labels) {
        if (!l.is_string() || !g.has_label(l.get<std::string>()))
          bad(gptr + "/labels", "unknown label");
        members.push_back(g.index_of(l.get<std::string>()));
      }
      try {
        f.add_max_group(std::move(coeff), std::move(members));
      } catch (const Error& e) {
        bad(gptr, e.what());
      }
    }
  }
  return f;
}

json functional_to_json(const Functional& f, const ExclusivityGraph& g) {
  json lin = json::object();
  for (const auto& [idx, coeff] : f.linear()) lin[g.label(idx)] = rational_str(coeff);
  json groups = json::array();
  for (const MaxGroup& grp : f.max_groups()) {
    json labels = json::array();
    for (int m : grp.members) labels.push_back(g.label(m));
    groups.push_back(json{{"coeff", rational_str(grp.coeff)}, {"labels", labels}});
  }
  return json{{"constant", rational_str(f.constant())}, {"linear", lin}, {"max_groups", groups}};
}

std::pair<int, int> position_at(const json& v, size_t n_contexts, const std::string& ptr) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    bad(ptr, "expected [context, outcome] (1-based integers)");
  int ctx = v[0].get<int>(), k = v[1].get<int>();
  if (ctx < 1 || ctx > static_cast<int>(n_contexts))
    fail(Errc::bad_index, "context index " + std::to_string(ctx) + " out of range (at " + ptr + ")");
  return {ctx - 1, k};
}

/// Missing standard functionals that are derivable from the scenario
/// structure are synthesized here; "I" has no structural definition and
/// must be explicit when an operation needs it.
void synthesize_functionals(Scenario& s) {
  if (s.constraint && !s.functionals.count("F")) {
    Functional f;
    for (const Label& l : s.constraint->labels) f.add_linear(s.graph.index_of(l), Rational(1));
    s.functionals.emplace("F", std::move(f));
  }
  if (!s.a_contexts.empty() && !s.functionals.count("T")) {
    Functional t;
    Rational coeff(1, static_cast<long long>(s.a_contexts.size()));
    for (int ci : s.a_contexts) t.add_max_group(coeff, s.contexts[static_cast<size_t>(ci)].members);
    s.functionals.emplace("T", std::move(t));
  }
  if (s.aprime && !s.functionals.count("aprime") && !s.a_contexts.empty()) {
    Functional body;
    if (s.aprime->mode == AprimeSpec::Mode::mixed_state_term) {
      for (int ci : s.a_contexts)
        body.add_max_group(Rational(1), s.contexts[static_cast<size_t>(ci)].members);
      for (const auto& [ctx, k] : s.aprime->terms)
        body.add_linear(s.contexts[static_cast<size_t>(ctx)].members[static_cast<size_t>(k - 1)],
                        Rational(1));
    } else {
      Rational coeff(1, static_cast<long long>(s.a_contexts.size()));
      for (int ci : s.a_contexts)
        body.add_max_group(coeff, s.contexts[static_cast<size_t>(ci)].members);
      const Functional* i = s.find_functional("I");
      if (i) {
        for (const auto& [idx, c] : i->linear()) body.add_linear(idx, c);
        body.set_constant(Rational(2) + i->constant());
      }
    }
    s.functionals.emplace("aprime", std::move(body));
  }
}

}  // namespace

double GoldenEntry::as_double() const {
  if (std::holds_alternative<Rational>(value)) return to_double(std::get<Rational>(value));
  if (std::holds_alternative<Scalar>(value)) return std::get<Scalar>(value).value();
  return std::get<double>(value);
}

std::string GoldenEntry::render() const {
  if (std::holds_alternative<Rational>(value)) return rational_str(std::get<Rational>(value));
  if (std::holds_alternative<Scalar>(value)) return std::get<Scalar>(value).str();
  return format_double(std::get<double>(value));
}

bool GoldenEntry::is_exact() const { return std::holds_alternative<Rational>(value); }

const Functional* Scenario::find_functional(const std::string& fname) const {
  auto it = functionals.find(fname);
  return it == functionals.end() ? nullptr : &it->second;
}

QuantumRealization Scenario::realization() const {
  if (!quantum) fail(Errc::missing_definition, "scenario has no quantum section");
  QuantumRealization out;
  out.dim = dimension;
  out.maximally_mixed = quantum->maximally_mixed;
  for (const Label& l : graph.labels()) {
    auto it = quantum->vectors.find(l);
    if (it == quantum->vectors.end())
      fail(Errc::missing_definition, "no vector for label \"" + l + "\"");
    out.vectors.push_back(normalized(it->second));
  }
  if (quantum->state) out.psi = normalized(*quantum->state);
  return out;
}

std::vector<Context> Scenario::full_contexts() const {
  std::vector<Context> out;
  for (const Context& c : contexts)
    if (static_cast<int>(c.members.size()) == dimension) out.push_back(c);
  return out;
}

Scenario parse_scenario(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(Errc::schema_violation, std::string("invalid JSON in ") + origin + ": " + e.what());
  }
  if (!j.is_object()) bad("/", "scenario must be a JSON object");

  Scenario s;
  s.name = need_string(j, "name", "/");
  const json& schema = need(j, "schema", "/");
  if (!schema.is_number_integer() || schema.get<int>() != 1)
    bad("/schema", "unsupported schema version");
  const json& dim = need(j, "dimension", "/");
  if (!dim.is_number_integer() || dim.get<int>() < 2) bad("/dimension", "dimension must be >= 2");
  s.dimension = dim.get<int>();

  const json& verts = need(j, "vertices", "/");
  const json& edges = need(j, "edges", "/");
  if (!verts.is_array()) bad("/vertices", "expected an array of labels");
  if (!edges.is_array()) bad("/edges", "expected an array of label pairs");
  std::vector<Label> labels;
  for (const json& v : verts) {
    if (!v.is_string()) bad("/vertices", "labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<Label, Label>> edge_list;
  for (size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      bad("/edges/" + std::to_string(i), "expected [label, label]");
    edge_list.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  try {
    s.graph = ExclusivityGraph::build(std::move(labels), edge_list);
  } catch (const Error& e) {
    bad("/edges", e.what());
  }

  const json& ctxs = need(j, "contexts", "/");
  if (!ctxs.is_array() || ctxs.empty()) bad("/contexts", "expected a nonempty array");
  for (size_t i = 0; i < ctxs.size(); ++i) {
    std::string cptr = "/contexts/" + std::to_string(i);
    const json& c = ctxs[i];
    if (!c.is_array() || c.empty()) bad(cptr, "expected a nonempty label array");
    Context ctx;
    for (size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_string() || !s.graph.has_label(c[k].get<std::string>()))
        bad(cptr + "/" + std::to_string(k), "unknown label");
      ctx.members.push_back(s.graph.index_of(c[k].get<std::string>()));
    }
    if (static_cast<int>(ctx.members.size()) > s.dimension) bad(cptr, "context larger than dimension");
    try {
      require_clique(s.graph, ctx);
    } catch (const Error& e) {
      bad(cptr, e.what());
    }
    s.contexts.push_back(std::move(ctx));
  }

  if (j.contains("a_contexts")) {
    const json& ac = j.at("a_contexts");
    if (!ac.is_array()) bad("/a_contexts", "expected an array of 1-based context indices");
    for (size_t i = 0; i < ac.size(); ++i) {
      if (!ac[i].is_number_integer()) bad("/a_contexts/" + std::to_string(i), "expected an integer");
      int idx = ac[i].get<int>();
      if (idx < 1 || idx > static_cast<int>(s.contexts.size()))
        fail(Errc::bad_index, "a_contexts index " + std::to_string(idx) + " out of range (at " +
                                  "/a_contexts/" + std::to_string(i) + ")");
      if (static_cast<int>(s.contexts[static_cast<size_t>(idx - 1)].members.size()) != s.dimension)
        bad("/a_contexts/" + std::to_string(i), "A-quantity contexts must be full contexts");
      s.a_contexts.push_back(idx - 1);
    }
  }

  if (j.contains("constraint")) {
    const json& c = j.at("constraint");
    ConstraintSpec cs;
    const json& lab = need(c, "labels", "/constraint");
    if (!lab.is_array() || lab.empty()) bad("/constraint/labels", "expected a label array");
    for (const json& l : lab) {
      if (!l.is_string() || !s.graph.has_label(l.get<std::string>()))
        bad("/constraint/labels", "unknown label");
      cs.labels.push_back(l.get<std::string>());
    }
    const json& pos = need(c, "outcome_positions", "/constraint");
    if (!pos.is_array() || pos.size() != cs.labels.size())
      bad("/constraint/outcome_positions", "expected one [context, outcome] pair per label");
    for (size_t i = 0; i < pos.size(); ++i) {
      std::string pptr = "/constraint/outcome_positions/" + std::to_string(i);
      auto [ctx, k] = position_at(pos[i], s.contexts.size(), pptr);
      const Context& cref = s.contexts[static_cast<size_t>(ctx)];
      if (k < 1 || k > static_cast<int>(cref.members.size()))
        fail(Errc::bad_index, "outcome index out of range (at " + pptr + ")");
      if (s.graph.label(cref.members[static_cast<size_t>(k - 1)]) != cs.labels[i])
        bad(pptr, "outcome position does not name label \"" + cs.labels[i] + "\"");
      cs.outcome_positions.emplace_back(ctx, k);
    }
    try {
      cs.value = Scalar::parse(need_string(c, "value", "/constraint"));
    } catch (const Error& e) {
      bad("/constraint/value", e.what());
    }
    cs.mixing_coefficient = rational_at(need(c, "c", "/constraint"), "/constraint/c");
    if (cs.mixing_coefficient <= 0 || cs.mixing_coefficient > 1)
      bad("/constraint/c", "mixing coefficient must lie in (0, 1]");
    s.constraint = std::move(cs);
  }

  if (j.contains("aprime")) {
    const json& a = j.at("aprime");
    AprimeSpec as;
    std::string mode = need_string(a, "mode", "/aprime");
    if (mode == "mixed_state_term")
      as.mode = AprimeSpec::Mode::mixed_state_term;
    else if (mode == "plus_I")
      as.mode = AprimeSpec::Mode::plus_i;
    else
      bad("/aprime/mode", "mode must be \"mixed_state_term\" or \"plus_I\"");
    if (a.contains("terms")) {
      const json& terms = a.at("terms");
      if (!terms.is_array()) bad("/aprime/terms", "expected an array");
      for (size_t i = 0; i < terms.size(); ++i) {
        std::string tptr = "/aprime/terms/" + std::to_string(i);
        auto [ctx, k] = position_at(terms[i], s.contexts.size(), tptr);
        if (k < 1 || k > static_cast<int>(s.contexts[static_cast<size_t>(ctx)].members.size()))
          fail(Errc::bad_index, "outcome index out of range (at " + tptr + ")");
        as.terms.emplace_back(ctx, k);
      }
    }
    if (as.mode == AprimeSpec::Mode::mixed_state_term && as.terms.empty())
      bad("/aprime", "mixed_state_term requires terms");
    s.aprime = std::move(as);
  }

  if (j.contains("functionals")) {
    const json& fs = j.at("functionals");
    if (!fs.is_object()) bad("/functionals", "expected an object");
    for (auto it = fs.begin(); it != fs.end(); ++it)
      s.functionals.emplace(it.key(),
                            parse_functional(it.value(), s.graph, "/functionals/" + it.key()));
  }

  if (j.contains("quantum")) {
    const json& q = j.at("quantum");
    QuantumSpec qs;
    const json& vecs = need(q, "vectors", "/quantum");
    if (!vecs.is_object()) bad("/quantum/vectors", "expected an object of label -> vector");
    for (const Label& l : s.graph.labels()) {
      if (!vecs.contains(l)) bad("/quantum/vectors", "no vector for label \"" + l + "\"");
      qs.vectors.emplace(l, vec_at(vecs.at(l), s.dimension, "/quantum/vectors/" + l));
    }
    const json& state = need(q, "state", "/quantum");
    if (state.is_string()) {
      if (state.get<std::string>() != "maximally_mixed")
        bad("/quantum/state", "state must be \"maximally_mixed\" or a vector");
      qs.maximally_mixed = true;
    } else {
      qs.maximally_mixed = false;
      qs.state = vec_at(state, s.dimension, "/quantum/state");
    }
    s.quantum = std::move(qs);
  }

  if (j.contains("golden")) {
    const json& g = j.at("golden");
    if (!g.is_object()) bad("/golden", "expected an object");
    for (auto it = g.begin(); it != g.end(); ++it) {
      const auto& keys = golden_keys();
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
        bad("/golden/" + it.key(), "unknown golden value name");
      const json& entry = it.value();
      GoldenEntry ge;
      const json& val = need(entry, "value", "/golden/" + it.key());
      if (val.is_number_integer())
        ge.value = Rational(val.get<long long>());
      else if (val.is_number())
        ge.value = val.get<double>();
      else if (val.is_string()) {
        Scalar sc = Scalar::parse(val.get<std::string>());
        if (sc.is_exact())
          ge.value = sc.rational();
        else
          ge.value = sc;
      } else
        bad("/golden/" + it.key() + "/value", "expected a number or string");
      if (entry.contains("tol")) {
        if (!entry.at("tol").is_number() || entry.at("tol").get<double>() < 0)
          bad("/golden/" + it.key() + "/tol", "tolerance must be a nonnegative number");
        ge.tol = entry.at("tol").get<double>();
      }
      s.golden.emplace(it.key(), std::move(ge));
    }
  }

  if (j.contains("notes")) {
    const json& notes = j.at("notes");
    if (!notes.is_array()) bad("/notes", "expected an array of strings");
    for (const json& n : notes) {
      if (!n.is_string()) bad("/notes", "expected an array of strings");
      s.notes.push_back(n.get<std::string>());
    }
  }

  synthesize_functionals(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) fail(Errc::io_error, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  j["schema"] = s.schema;
  j["dimension"] = s.dimension;
  j["vertices"] = s.graph.labels();
  json edges = json::array();
  for (auto [a, b] : s.graph.edges()) edges.push_back(json::array({s.graph.label(a), s.graph.label(b)}));
  j["edges"] = edges;
  json ctxs = json::array();
  for (const Context& c : s.contexts) ctxs.push_back(context_labels(s.graph, c));
  j["contexts"] = ctxs;
  if (!s.a_contexts.empty()) {
    json ac = json::array();
    for (int i : s.a_contexts) ac.push_back(i + 1);
    j["a_contexts"] = ac;
  }
  if (s.constraint) {
    json pos = json::array();
    for (auto [ctx, k] : s.constraint->outcome_positions) pos.push_back(json::array({ctx + 1, k}));
    j["constraint"] = json{{"labels", s.constraint->labels},
                           {"outcome_positions", pos},
                           {"value", s.constraint->value.str()},
                           {"c", rational_str(s.constraint->mixing_coefficient)}};
  }
  if (s.aprime) {
    json terms = json::array();
    for (auto [ctx, k] : s.aprime->terms) terms.push_back(json::array({ctx + 1, k}));
    j["aprime"] = json{
        {"mode", s.aprime->mode == AprimeSpec::Mode::mixed_state_term ? "mixed_state_term"
                                                                      : "plus_I"},
        {"terms", terms}};
  }
  if (!s.functionals.empty()) {
    json fs = json::object();
    for (const auto& [name, f] : s.functionals) fs[name] = functional_to_json(f, s.graph);
    j["functionals"] = fs;
  }
  if (s.quantum) {
    json vecs = json::object();
    for (const auto& [l, v] : s.quantum->vectors) vecs[l] = v;
    json q;
    q["vectors"] = vecs;
    if (s.quantum->maximally_mixed)
      q["state"] = "maximally_mixed";
    else
      q["state"] = *s.quantum->state;
    j["quantum"] = q;
  }
  if (!s.golden.empty()) {
    json g = json::object();
    for (const auto& [key, entry] : s.golden) {
      json e;
      if (std::holds_alternative<Rational>(entry.value))
        e["value"] = rational_str(std::get<Rational>(entry.value));
      else if (std::holds_alternative<Scalar>(entry.value))
        e["value"] = std::get<Scalar>(entry.value).str();
      else
        e["value"] = std::get<double>(entry.value);
      e["tol"] = entry.tol;
      g[key] = e;
    }
    j["golden"] = g;
  }
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j.dump(2);
}

namespace {

std::map<std::string, GoldenEntry> rational_goldens(
    std::initializer_list<std::pair<const char*, Rational>> entries) {
  std::map<std::string, GoldenEntry> out;
  for (const auto& [k, v] : entries) out.emplace(k, GoldenEntry{v, 0.0});
  return out;
}

Scenario yo13_scenario() {
  Scenario s;
  s.name = "yo13";
  s.dimension = 3;
  s.graph = builtin_graph("yo13");
  s.contexts = maximal_cliques(s.graph);  // canonical order matches the 16 measurements
  ScenarioFunctionals pf = builtin_functionals("yo13");
  s.a_contexts = pf.a_contexts;
  ConstraintSpec cs;
  cs.labels = {"A", "B", "C", "D"};
  cs.outcome_positions = {{4, 2}, {6, 2}, {8, 2}, {9, 2}};  // contexts (4,A),(5,B),(6,C),(6,D)
  cs.value = *pf.operational_value;
  cs.mixing_coefficient = *pf.mixing_coefficient;
  s.constraint = std::move(cs);
  AprimeSpec as;
  as.mode = AprimeSpec::Mode::mixed_state_term;
  as.terms = s.constraint->outcome_positions;
  s.aprime = std::move(as);
  s.functionals.emplace("I", pf.noncontextuality);
  s.functionals.emplace("F", pf.constraint);
  s.functionals.emplace("T", pf.envelope_body);
  s.functionals.emplace("aprime", pf.aprime_body);

  QuantumSpec qs;
  const std::vector<Vec> raw{
      {1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {0, 1, -1}, {-1, 0, 1}, {1, -1, 0}, {0, 1, 1},
      {1, 0, 1},  {1, 1, 0},  {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}};
  for (int i = 0; i < s.graph.size(); ++i) qs.vectors.emplace(s.graph.label(i), raw[static_cast<size_t>(i)]);
  qs.maximally_mixed = true;
  s.quantum = std::move(qs);

  double s5 = std::sqrt(5.0);
  s.golden = rational_goldens({{"clique_count", Rational(16)},
                               {"vertex_count", Rational(420)},
                               {"f_max", Rational(8, 3)},
                               {"ks_I", Rational(7)},
                               {"aprime_bound", Rational(4)},
                               {"envelope_alpha", Rational(4, 3)},
                               {"envelope_beta", Rational(1, 3)}});
  s.golden.emplace("onci_bound", GoldenEntry{4.0 * s5 / 9.0, 1e-9});
  s.golden.emplace("a_star", GoldenEntry{(8.0 - 2.0 * s5) / 3.0, 1e-9});
  s.golden.emplace("quantum_I", GoldenEntry{Rational(22, 3), 1e-9});
  s.golden.emplace("quantum_A", GoldenEntry{Rational(1), 1e-12});
  s.golden.emplace("quantum_Aprime", GoldenEntry{Rational(13, 3), 1e-9});
  return s;
}

Scenario kcbs_scenario() {
  Scenario s;
  s.name = "kcbs";
  s.dimension = 3;
  s.graph = builtin_graph("kcbs5-extended");
  for (int i = 1; i <= 5; ++i)
    s.contexts.push_back(Context{{i - 1, i % 5, 5 + i - 1}});  // (1,2,A), ..., (5,1,E)
  ScenarioFunctionals pf = builtin_functionals("kcbs");
  s.a_contexts = pf.a_contexts;
  ConstraintSpec cs;
  cs.labels = {"1", "2", "3", "4", "5"};
  for (int i = 0; i < 5; ++i) cs.outcome_positions.emplace_back(i, 1);
  cs.value = *pf.operational_value;
  cs.mixing_coefficient = *pf.mixing_coefficient;
  s.constraint = std::move(cs);
  s.functionals.emplace("I", pf.noncontextuality);
  s.functionals.emplace("F", pf.constraint);
  s.functionals.emplace("T", pf.envelope_body);

  QuantumRealization qr = builtin_realization("kcbs5-extended");
  QuantumSpec qs;
  for (int i = 0; i < s.graph.size(); ++i)
    qs.vectors.emplace(s.graph.label(i), qr.vectors[static_cast<size_t>(i)]);
  qs.maximally_mixed = false;
  qs.state = *qr.psi;
  s.quantum = std::move(qs);

  double s5 = std::sqrt(5.0);
  s.golden = rational_goldens({{"clique_count", Rational(5)},
                               {"vertex_count", Rational(12)},
                               {"f_max", Rational(5, 2)},
                               {"ks_I", Rational(2)},
                               {"envelope_alpha", Rational(17, 5)},
                               {"envelope_beta", Rational(6, 5)}});
  s.golden.emplace("onci_bound", GoldenEntry{1.0 + 0.4 * (s5 + std::sqrt(5.0 - 2.0 * s5) - 3.0), 1e-9});
  s.golden.emplace("a_star", GoldenEntry{2.5 - std::sqrt(0.5 * (2.5 - s5)), 1e-9});
  s.golden.emplace("quantum_I", GoldenEntry{Scalar::surd(5), 1e-9});
  s.golden.emplace("quantum_A", GoldenEntry{Rational(1), 1e-12});
  s.notes.push_back(
      "the commonly quoted closed form 1 - (2/5)*(sqrt(5) + sqrt(5 - 2*sqrt(5)) - 3) evaluates "
      "to about 1.015, not 0.985; the sign in front of the bracket is inconsistent with the "
      "derivation, and the bound reported here equals 1 + (2/5)*(sqrt(5) + sqrt(5 - 2*sqrt(5)) "
      "- 3)");
  return s;
}

Scenario cycle_scenario(int n) {
  if (n < 4) fail(Errc::bad_cycle_length, "cycle length must be >= 4, got " + std::to_string(n));
  Scenario s;
  s.name = "cycle:" + std::to_string(n);
  s.dimension = 3;
  s.graph = builtin_graph("cycle-extended(" + std::to_string(n) + ")");
  for (int i = 1; i <= n; ++i) s.contexts.push_back(Context{{i - 1, i % n, n + i - 1}});
  ScenarioFunctionals pf = builtin_functionals("cycle(" + std::to_string(n) + ")");
  s.a_contexts = pf.a_contexts;
  AprimeSpec as;
  as.mode = AprimeSpec::Mode::plus_i;
  s.aprime = std::move(as);
  s.functionals.emplace("I", pf.noncontextuality);
  s.functionals.emplace("T", pf.envelope_body);
  s.functionals.emplace("aprime", pf.aprime_body);

  QuantumRealization qr = builtin_realization("cycle-extended(" + std::to_string(n) + ")");
  QuantumSpec qs;
  for (int i = 0; i < s.graph.size(); ++i)
    qs.vectors.emplace(s.graph.label(i), qr.vectors[static_cast<size_t>(i)]);
  qs.maximally_mixed = false;
  qs.state = *qr.psi;
  s.quantum = std::move(qs);

  double cp = std::cos(M_PI / n);
  double quantum_i = n % 2 ? n * cp / (1 + cp) : n / 2.0;
  s.golden = rational_goldens({{"clique_count", Rational(n)},
                               {"aprime_bound", Rational(n / 2 + 3)}});
  s.golden.emplace("quantum_I", GoldenEntry{quantum_i, 1e-9});
  s.golden.emplace("quantum_A", GoldenEntry{Rational(1), 1e-12});
  s.golden.emplace("quantum_Aprime", GoldenEntry{3.0 + quantum_i, 1e-9});
  return s;
}

std::optional<int> parse_cycle_name(const std::string& name) {
  for (const char* prefix : {"cycle:", "cycle("}) {
    std::string pre(prefix);
    if (name.size() > pre.size() && name.compare(0, pre.size(), pre) == 0) {
      std::string arg = name.substr(pre.size());
      if (!arg.empty() && arg.back() == ')') arg.pop_back();
      try {
        size_t used = 0;
        int n = std::stoi(arg, &used);
        if (used == arg.size()) return n;
      } catch (const std::exception&) {
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_builtin_scenario_name(const std::string& name) {
  if (name == "yo13" || name == "kcbs") return true;
  auto n = parse_cycle_name(name);
  return n && *n >= 4;
}

Scenario builtin_scenario(const std::string& name) {
  if (name == "yo13") return yo13_scenario();
  if (name == "kcbs") return kcbs_scenario();
  if (auto n = parse_cycle_name(name)) return cycle_scenario(*n);
  fail(Errc::unknown_builtin, "no built-in scenario named \"" + name + "\"");
}

Scenario resolve_scenario(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return load_scenario(path_or_name);
  if (is_builtin_scenario_name(path_or_name)) return builtin_scenario(path_or_name);
  fail(Errc::io_error,
       "\"" + path_or_name + "\" is neither a scenario file nor a built-in scenario name");
}

}  // namespace ksb
