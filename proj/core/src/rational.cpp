#include "ksbound/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "ksbound/error.hpp"

namespace ksb {

namespace {

bool looks_like_integer(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!looks_like_integer(num) || (slash != std::string_view::npos && !looks_like_integer(den)))
    fail(Errc::bad_rational, "expected \"p\" or \"p/q\", got \"" + std::string(text) + "\"");
  try {
    Rational r{std::string(text)};
    return r;
  } catch (const std::exception&) {
    fail(Errc::bad_rational, "cannot parse \"" + std::string(text) + "\"");
  }
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational sqrt_upper_convergent(long long k, double max_err) {
  if (k < 0) fail(Errc::unknown_surd, "sqrt of negative integer");
  long long a0 = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(k))));
  while ((a0 + 1) * (a0 + 1) <= k) ++a0;
  while (a0 * a0 > k) --a0;
  if (a0 * a0 == k) return Rational(a0);

  // Continued fraction of sqrt(k): periodic recurrence on (m, d, a).
  double target = std::sqrt(static_cast<double>(k));
  Integer h_prev = 1, h = a0, q_prev = 0, q = 1;
  long long m = 0, d = 1, a = a0;
  for (int iter = 0; iter < 128; ++iter) {
    Rational conv(h, q);
    double approx = to_double(conv);
    if (approx > target && approx - target < max_err) return conv;
    m = d * a - m;
    d = (k - m * m) / d;
    a = (a0 + m) / d;
    Integer h_next = Integer(a) * h + h_prev;
    Integer q_next = Integer(a) * q + q_prev;
    h_prev = h; h = h_next;
    q_prev = q; q = q_next;
  }
  fail(Errc::unknown_surd, "no convergent found for sqrt(" + std::to_string(k) + ")");
}

Scalar Scalar::exact(Rational r) {
  Scalar s;
  s.kind_ = Kind::exact;
  s.rational_ = std::move(r);
  return s;
}

Scalar Scalar::surd(long long k) {
  if (k < 0) fail(Errc::unknown_surd, "sqrt of negative integer");
  long long root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(k))));
  if (root * root == k) return exact(Rational(root));
  Scalar s;
  s.kind_ = Kind::surd;
  s.surd_k_ = k;
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    std::string inner(text.substr(5, text.size() - 6));
    try {
      size_t used = 0;
      long long k = std::stoll(inner, &used);
      if (used != inner.size()) throw std::invalid_argument(inner);
      return surd(k);
    } catch (const std::exception&) {
      fail(Errc::unknown_surd, "unsupported surd \"" + std::string(text) + "\"");
    }
  }
  return exact(parse_rational(text));
}

const Rational& Scalar::rational() const {
  if (kind_ != Kind::exact) fail(Errc::unknown_surd, "surd used where an exact rational is required");
  return rational_;
}

long long Scalar::surd_arg() const {
  if (kind_ != Kind::surd) fail(Errc::unknown_surd, "exact scalar has no surd argument");
  return surd_k_;
}

double Scalar::value() const {
  return kind_ == Kind::exact ? to_double(rational_) : std::sqrt(static_cast<double>(surd_k_));
}

Rational Scalar::upper_rational() const {
  return kind_ == Kind::exact ? rational_ : sqrt_upper_convergent(surd_k_);
}

std::string Scalar::str() const {
  return kind_ == Kind::exact ? rational_str(rational_) : "sqrt(" + std::to_string(surd_k_) + ")";
}

}  // namespace ksb
