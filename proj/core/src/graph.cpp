#include "ksbound/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ksbound/error.hpp"

namespace ksb {

ExclusivityGraph ExclusivityGraph::build(std::vector<Label> labels,
                                         const std::vector<std::pair<Label, Label>>& edges) {
  if (labels.size() > kMaxVertices)
    fail(Errc::graph_too_large,
         "graph has " + std::to_string(labels.size()) + " vertices, cap is 64");
  std::unordered_map<Label, int> index;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = index.emplace(labels[i], static_cast<int>(i));
    if (!inserted) fail(Errc::duplicate_label, "label \"" + labels[i] + "\" appears twice");
  }
  ExclusivityGraph g;
  g.labels_ = std::move(labels);
  g.adj_.assign(g.labels_.size(), 0);
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(Errc::dangling_edge, "edge endpoint \"" + a + "\" is not a vertex");
    if (ib == index.end()) fail(Errc::dangling_edge, "edge endpoint \"" + b + "\" is not a vertex");
    if (ia->second == ib->second) fail(Errc::self_loop, "self-loop at \"" + a + "\"");
    g.adj_[static_cast<size_t>(ia->second)] |= 1ull << ib->second;
    g.adj_[static_cast<size_t>(ib->second)] |= 1ull << ia->second;
  }
  return g;
}

int ExclusivityGraph::index_of(const Label& l) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) return static_cast<int>(i);
  fail(Errc::unknown_label, "no vertex labelled \"" + l + "\"");
}

bool ExclusivityGraph::has_label(const Label& l) const {
  return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
}

std::vector<std::pair<int, int>> ExclusivityGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

int ExclusivityGraph::edge_count() const { return static_cast<int>(edges().size()); }

std::vector<Label> context_labels(const ExclusivityGraph& g, const Context& c) {
  std::vector<Label> out;
  out.reserve(c.members.size());
  for (int m : c.members) out.push_back(g.label(m));
  return out;
}

void require_clique(const ExclusivityGraph& g, const Context& c) {
  for (size_t i = 0; i < c.members.size(); ++i)
    for (size_t j = i + 1; j < c.members.size(); ++j)
      if (!g.adjacent(c.members[i], c.members[j]))
        fail(Errc::non_clique_context, "vertices \"" + g.label(c.members[i]) + "\" and \"" +
                                           g.label(c.members[j]) + "\" are not adjacent");
}

namespace {

using Mask = std::uint64_t;

void bron_kerbosch(const ExclusivityGraph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of p | x with most neighbors in p.
  Mask px = p | x;
  int pivot = -1, best = -1;
  for (Mask m = px; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int deg = std::popcount(p & g.neighbor_mask(v));
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  Mask candidates = p & ~g.neighbor_mask(pivot);
  for (Mask m = candidates; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    Mask vb = 1ull << v;
    bron_kerbosch(g, r | vb, p & g.neighbor_mask(v), x & g.neighbor_mask(v), out);
    p &= ~vb;
    x |= vb;
  }
}

std::vector<int> mask_to_sorted(Mask m) {
  std::vector<int> v;
  while (m) {
    v.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return v;
}

bool is_cycle_1_to_n(const ExclusivityGraph& g) {
  int n = g.size();
  if (n < 4) return false;
  for (int i = 0; i < n; ++i)
    if (g.label(i) != std::to_string(i + 1)) return false;
  for (int i = 0; i < n; ++i)
    if (std::popcount(g.neighbor_mask(i)) != 2 || !g.adjacent(i, (i + 1) % n)) return false;
  return true;
}

}  // namespace

std::vector<Context> maximal_cliques(const ExclusivityGraph& g) {
  if (g.size() == 0) return {};
  Mask all = g.size() == 64 ? ~0ull : (1ull << g.size()) - 1;
  std::vector<Mask> raw;
  bron_kerbosch(g, 0, all, 0, raw);
  std::vector<Context> cliques;
  cliques.reserve(raw.size());
  for (Mask m : raw) cliques.push_back(Context{mask_to_sorted(m)});
  std::sort(cliques.begin(), cliques.end(),
            [](const Context& a, const Context& b) { return a.members < b.members; });
  return cliques;
}

int max_clique_size(const ExclusivityGraph& g) {
  int best = 0;
  for (const Context& c : maximal_cliques(g)) best = std::max(best, static_cast<int>(c.members.size()));
  return best;
}

std::pair<ExclusivityGraph, CompletionRecord> complete_to_dimension(const ExclusivityGraph& g,
                                                                    int d) {
  auto cliques = maximal_cliques(g);
  for (const Context& c : cliques)
    if (static_cast<int>(c.members.size()) > d)
      fail(Errc::dimension_too_small, "graph has a clique of size " +
                                          std::to_string(c.members.size()) +
                                          " > requested dimension " + std::to_string(d));

  std::vector<Label> labels = g.labels();
  std::unordered_set<Label> taken(labels.begin(), labels.end());
  std::vector<std::pair<Label, Label>> edges;
  for (auto [i, j] : g.edges()) edges.emplace_back(g.label(i), g.label(j));

  CompletionRecord rec{g, {}, {}};
  bool cycle = is_cycle_1_to_n(g);

  auto add_for_clique = [&](const std::vector<int>& members, const std::vector<Label>& fresh) {
    std::vector<Label> group;
    for (const Label& base : fresh) {
      Label name = base;
      for (int ordinal = 2; taken.count(name); ++ordinal) name = base + std::to_string(ordinal);
      taken.insert(name);
      labels.push_back(name);
      group.push_back(name);
      for (int m : members) edges.emplace_back(g.label(m), name);
      for (size_t k = 0; k + 1 < group.size(); ++k) edges.emplace_back(group[k], name);
    }
    if (!group.empty()) {
      rec.clique_additions.emplace_back(members, group);
      rec.added.insert(rec.added.end(), group.begin(), group.end());
    }
  };

  if (cycle && d == 3) {
    // Pure cycle 1..n: i' completes edge (i, i+1 mod n).
    int n = g.size();
    for (int i = 0; i < n; ++i) {
      std::vector<int> members{i, (i + 1) % n};
      std::sort(members.begin(), members.end());
      add_for_clique(members, {std::to_string(i + 1) + "'"});
    }
  } else {
    for (const Context& c : cliques) {
      int missing = d - static_cast<int>(c.members.size());
      if (missing <= 0) continue;
      Label base;
      for (size_t k = 0; k < c.members.size(); ++k) {
        if (k) base += "+";
        base += g.label(c.members[k]);
      }
      base += "'";
      add_for_clique(c.members, std::vector<Label>(static_cast<size_t>(missing), base));
    }
  }

  ExclusivityGraph completed = ExclusivityGraph::build(labels, edges);
  // Every edge of the result must now lie in a d-clique.
  for (const Context& c : maximal_cliques(completed))
    if (static_cast<int>(c.members.size()) != d && !rec.added.empty())
      fail(Errc::dimension_too_small, "completion left a maximal clique of size " +
                                          std::to_string(c.members.size()));
  return {std::move(completed), std::move(rec)};
}

namespace {

ExclusivityGraph make_yo13() {
  std::vector<Label> labels{"1", "2", "3", "4", "5", "6", "7", "8", "9", "A", "B", "C", "D"};
  // Edge set implied by the 16 maximal cliques; nothing else.
  std::vector<std::vector<Label>> cliques{
      {"1", "2", "3"}, {"1", "4", "7"}, {"2", "5", "8"}, {"3", "6", "9"},
      {"4", "A"}, {"4", "D"}, {"5", "B"}, {"5", "D"}, {"6", "C"}, {"6", "D"},
      {"7", "B"}, {"7", "C"}, {"8", "A"}, {"8", "C"}, {"9", "A"}, {"9", "B"}};
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& c : cliques)
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) edges.emplace_back(c[i], c[j]);
  return ExclusivityGraph::build(labels, edges);
}

ExclusivityGraph make_cycle(int n) {
  if (n < 4) fail(Errc::bad_cycle_length, "cycle length must be >= 4, got " + std::to_string(n));
  std::vector<Label> labels;
  std::vector<std::pair<Label, Label>> edges;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) edges.emplace_back(std::to_string(i), std::to_string(i % n + 1));
  return ExclusivityGraph::build(labels, edges);
}

ExclusivityGraph make_kcbs_extended() {
  auto [completed, rec] = complete_to_dimension(make_cycle(5), 3);
  // Same graph, completion vertices renamed 1'..5' -> A..E.
  std::vector<Label> labels = completed.labels();
  const Label renames[5] = {"A", "B", "C", "D", "E"};
  for (auto& l : labels) {
    for (int i = 0; i < 5; ++i)
      if (l == std::to_string(i + 1) + "'") l = renames[i];
  }
  std::vector<std::pair<Label, Label>> edges;
  for (auto [i, j] : completed.edges())
    edges.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]);
  return ExclusivityGraph::build(labels, edges);
}

// "cycle(7)" / "cycle:7" -> 7.
bool parse_arg(const std::string& name, const std::string& prefix, int& n) {
  if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
      name[prefix.size()] == '(' && name.back() == ')') {
    try {
      n = std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }
  if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 &&
      name[prefix.size()] == ':') {
    try {
      n = std::stoi(name.substr(prefix.size() + 1));
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }
  return false;
}

}  // namespace

ExclusivityGraph builtin_graph(const std::string& name) {
  if (name == "yo13") return make_yo13();
  if (name == "kcbs5") return make_cycle(5);
  if (name == "kcbs5-extended") return make_kcbs_extended();
  int n = 0;
  if (parse_arg(name, "cycle-extended", n)) return complete_to_dimension(make_cycle(n), 3).first;
  if (parse_arg(name, "cycle", n)) return make_cycle(n);
  fail(Errc::unknown_builtin, "no built-in graph named \"" + name + "\"");
}

}  // namespace ksb
