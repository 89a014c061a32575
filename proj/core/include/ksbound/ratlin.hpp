#ifndef KSBOUND_RATLIN_HPP
#define KSBOUND_RATLIN_HPP

#include <optional>
#include <vector>

#include "ksbound/rational.hpp"

namespace ksb {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

Rational dot(const RatVec& a, const RatVec& b);

/// Row rank by Gaussian elimination (copy, exact).
int rank(RatMat m);

/// Unique solution of A x = b if the system is consistent with full column
/// rank; nullopt otherwise. A may have more rows than columns.
std::optional<RatVec> solve_unique(RatMat a, RatVec b);

}  // namespace ksb

#endif  // KSBOUND_RATLIN_HPP
