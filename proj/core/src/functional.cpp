#include "ksbound/functional.hpp"

#include <algorithm>

#include "ksbound/error.hpp"

namespace ksb {

Functional& Functional::add_linear(int var, Rational coeff) {
  linear_.emplace_back(var, std::move(coeff));
  return *this;
}

Functional& Functional::add_max_group(Rational coeff, std::vector<int> members) {
  if (coeff < 0)
    fail(Errc::negative_max_coefficient, "max-group coefficient " + rational_str(coeff) +
                                             " < 0 breaks convexity");
  if (members.empty()) fail(Errc::bad_index, "max-group needs at least one member");
  max_groups_.push_back(MaxGroup{std::move(coeff), std::move(members)});
  return *this;
}

Functional& Functional::set_constant(Rational c) {
  constant_ = std::move(c);
  return *this;
}

Rational Functional::eval(std::span<const Rational> w) const {
  Rational v = constant_;
  for (const auto& [i, c] : linear_) v += c * w[static_cast<size_t>(i)];
  for (const MaxGroup& g : max_groups_) {
    Rational best = w[static_cast<size_t>(g.members.front())];
    for (size_t k = 1; k < g.members.size(); ++k)
      best = std::max(best, w[static_cast<size_t>(g.members[k])]);
    v += g.coeff * best;
  }
  return v;
}

std::vector<Rational> Functional::linear_coeffs(int n) const {
  std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
  for (const auto& [i, coeff] : linear_) c[static_cast<size_t>(i)] += coeff;
  return c;
}

}  // namespace ksb
