#ifndef KSBOUND_RATIONAL_HPP
#define KSBOUND_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace ksb {

/// Exact rational arithmetic carrier. GMP keeps values canonical
/// (reduced, positive denominator), which the whole pipeline relies on
/// for deduplication and byte-stable rendering.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "-p/q", et al. Throws Errc::bad_rational on anything else.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "4", "-8/3". Inverse of parse_rational.
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

/// Smallest continued-fraction convergent of sqrt(k) that lies strictly
/// above sqrt(k) and within max_err of it. Exact-arithmetic cap for
/// irrational slice limits (sqrt(5) -> 161/72).
Rational sqrt_upper_convergent(long long k, double max_err = 1e-4);

/// An exact rational or a sqrt(k) surd; the only scalar forms scenario
/// constraints may take.
class Scalar {
 public:
  Scalar() : kind_(Kind::exact), rational_(0) {}
  static Scalar exact(Rational r);
  static Scalar surd(long long k);  // sqrt(k), k >= 0
  static Scalar parse(std::string_view text);

  bool is_exact() const { return kind_ == Kind::exact; }
  const Rational& rational() const;  // exact form only
  long long surd_arg() const;        // surd form only

  double value() const;
  /// Exact value when rational; conservative rational cap (>= value) otherwise.
  Rational upper_rational() const;
  std::string str() const;  // "4/3" | "sqrt(5)"

 private:
  enum class Kind { exact, surd };
  Kind kind_;
  Rational rational_;
  long long surd_k_ = 0;
};

}  // namespace ksb

#endif  // KSBOUND_RATIONAL_HPP
