#ifndef KSBOUND_TESTS_ORACLE_HPP
#define KSBOUND_TESTS_ORACLE_HPP

#include <vector>

#include "ksbound/graph.hpp"
#include "ksbound/polytope.hpp"

namespace ksb::oracle {

/// Brute-force vertex enumeration: solve every full-rank active-constraint
/// candidate set, keep feasible solutions, deduplicate. Independent of the
/// double description path; intended for polytopes with <= 12 variables.
std::vector<RfVertex> vertices(const HRepPolytope& p);

/// All admissible {0,1} assignments by exhaustive scan (2^n).
std::vector<RfVertex> deterministic_assignments(const HRepPolytope& p);

/// Maximal cliques by subset scan (2^n), sorted canonically.
std::vector<Context> maximal_cliques(const ExclusivityGraph& g);

}  // namespace ksb::oracle

#endif  // KSBOUND_TESTS_ORACLE_HPP
