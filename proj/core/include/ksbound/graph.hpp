#ifndef KSBOUND_GRAPH_HPP
#define KSBOUND_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ksb {

using Label = std::string;

/// Exclusivity graph: vertices are rays, edges are orthogonality.
/// Label order is canonical and fixes variable/constraint order in every
/// downstream computation. Immutable after construction; capped at 64
/// vertices so adjacency fits one mask word.
class ExclusivityGraph {
 public:
  static constexpr int kMaxVertices = 64;

  static ExclusivityGraph build(std::vector<Label> labels,
                                const std::vector<std::pair<Label, Label>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  /// Index in canonical order; throws Errc::unknown_label.
  int index_of(const Label& l) const;
  bool has_label(const Label& l) const;

  bool adjacent(int i, int j) const { return i != j && (adj_[static_cast<size_t>(i)] >> j) & 1u; }
  std::uint64_t neighbor_mask(int i) const { return adj_[static_cast<size_t>(i)]; }

  /// Edges (i, j) with i < j, lexicographic.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

 private:
  std::vector<Label> labels_;
  std::vector<std::uint64_t> adj_;
};

/// A clique of the graph used as a measurement; member order is outcome
/// order (k = 1-based position). Size d = full context, < d = partial.
struct Context {
  std::vector<int> members;

  bool operator==(const Context&) const = default;
};

std::vector<Label> context_labels(const ExclusivityGraph& g, const Context& c);

/// Throws Errc::non_clique_context unless members are pairwise adjacent and distinct.
void require_clique(const ExclusivityGraph& g, const Context& c);

/// All maximal cliques, members sorted in canonical label order, list
/// sorted lexicographically. Bron-Kerbosch with pivoting.
std::vector<Context> maximal_cliques(const ExclusivityGraph& g);

struct CompletionRecord {
  ExclusivityGraph original;
  std::vector<Label> added;
  /// Partial maximal clique (original indices) -> labels added for it.
  std::vector<std::pair<std::vector<int>, std::vector<Label>>> clique_additions;

  bool empty() const { return added.empty(); }
};

/// Extends g so every maximal clique reaches size d; added vertices are
/// adjacent to their clique and to each other. Fresh labels: member labels
/// joined by "+" with a "'" suffix (ordinals appended on collision); a pure
/// cycle 1..n gets labels 1'..n' with i' on edge (i, i+1 mod n).
std::pair<ExclusivityGraph, CompletionRecord> complete_to_dimension(const ExclusivityGraph& g,
                                                                    int d);

/// Built-in graphs: "yo13", "kcbs5", "kcbs5-extended", "cycle(n)",
/// "cycle-extended(n)" with n >= 4.
ExclusivityGraph builtin_graph(const std::string& name);

/// Largest clique size (exact, branch and bound).
int max_clique_size(const ExclusivityGraph& g);

}  // namespace ksb

#endif  // KSBOUND_GRAPH_HPP
