#ifndef KSBOUND_POLYTOPE_HPP
#define KSBOUND_POLYTOPE_HPP

#include <string>
#include <utility>
#include <vector>

#include "ksbound/functional.hpp"
#include "ksbound/graph.hpp"
#include "ksbound/ratlin.hpp"

namespace ksb {

struct LinearConstraint {
  RatVec coeffs;  // over the variable order
  Rational rhs;
};

enum class Relation { less_equal, greater_equal };

struct SliceConstraint {
  RatVec coeffs;
  Relation relation;
  Rational rhs;
};

/// Halfspace description of a response-function polytope: one equality per
/// full context, one <= 1 inequality per partial context, w >= 0 implicit
/// for every variable. Bounded by construction (every variable must occur
/// in some context).
class HRepPolytope {
 public:
  HRepPolytope(std::vector<Label> variables, std::vector<LinearConstraint> equalities,
               std::vector<LinearConstraint> inequalities);

  int dimension() const { return static_cast<int>(variables_.size()); }
  const std::vector<Label>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& equalities() const { return equalities_; }
  /// Rows mean coeffs . w <= rhs. Nonnegativity rows are not stored.
  const std::vector<LinearConstraint>& inequalities() const { return inequalities_; }

 private:
  std::vector<Label> variables_;
  std::vector<LinearConstraint> equalities_;
  std::vector<LinearConstraint> inequalities_;
};

/// One extremal point of the response-function polytope; exact coordinates
/// in variable order.
struct RfVertex {
  RatVec coords;

  bool operator==(const RfVertex&) const = default;
};

/// Builds the H-representation for the given contexts. Size-d contexts
/// yield equalities, smaller ones subnormalization inequalities; constraint
/// order follows the context order given.
HRepPolytope build_polytope(const ExclusivityGraph& g, const std::vector<Context>& contexts,
                            int d);

/// Appends slice constraints; the original is not modified.
HRepPolytope slice(const HRepPolytope& p, const std::vector<SliceConstraint>& constraints);

/// Complete vertex set, exact, deduplicated, sorted lexicographically by
/// coordinates. Double description over the homogenized cone after exact
/// elimination of the equality block. Empty result = empty polytope.
std::vector<RfVertex> enumerate_vertices(const HRepPolytope& p);

/// Exact maximum of a convex functional over the vertex set with one
/// maximizing vertex (ties: lexicographically smallest).
std::pair<Rational, RfVertex> max_functional(const std::vector<RfVertex>& vertices,
                                             const Functional& f);

/// Subset with every coordinate in {0,1}.
std::vector<RfVertex> deterministic_vertices(const std::vector<RfVertex>& vertices);

struct VertexCheck {
  bool feasible;
  bool extremal;  // active constraints have rank == dimension
};

VertexCheck check_vertex(const HRepPolytope& p, const RfVertex& v);

}  // namespace ksb

#endif  // KSBOUND_POLYTOPE_HPP
