#ifndef KSBOUND_FUNCTIONAL_HPP
#define KSBOUND_FUNCTIONAL_HPP

#include <span>
#include <vector>

#include "ksbound/rational.hpp"

namespace ksb {

struct MaxGroup {
  Rational coeff;            // must be >= 0 (keeps the functional convex)
  std::vector<int> members;  // variable indices
};

/// constant + sum of linear terms + sum of coeff * max over a variable set.
/// Convex by construction, so its maximum over a polytope is attained at a
/// vertex. Variable indices refer to a fixed label order.
class Functional {
 public:
  Functional() = default;
  explicit Functional(Rational constant) : constant_(std::move(constant)) {}

  Functional& add_linear(int var, Rational coeff);
  /// Throws Errc::negative_max_coefficient if coeff < 0.
  Functional& add_max_group(Rational coeff, std::vector<int> members);
  Functional& set_constant(Rational c);

  const Rational& constant() const { return constant_; }
  const std::vector<std::pair<int, Rational>>& linear() const { return linear_; }
  const std::vector<MaxGroup>& max_groups() const { return max_groups_; }
  bool is_linear() const { return max_groups_.empty(); }

  Rational eval(std::span<const Rational> w) const;

  /// Coefficient vector of the linear part over n variables.
  std::vector<Rational> linear_coeffs(int n) const;

 private:
  Rational constant_ = 0;
  std::vector<std::pair<int, Rational>> linear_;
  std::vector<MaxGroup> max_groups_;
};

}  // namespace ksb

#endif  // KSBOUND_FUNCTIONAL_HPP
