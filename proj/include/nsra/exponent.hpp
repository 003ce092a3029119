/// @file exponent.hpp
/// @brief Lebesgue exponents: positive rationals extended with +infinity.
///
/// Endpoint exponents matter throughout this project (sup norms, strict
/// versus non-strict angular thresholds), so infinity is a first-class value
/// rather than a sentinel double.  Conditions are written in "reciprocal
/// form" wherever possible: 1/p is an exact Rational that is 0 at p = inf,
/// which removes every special case from expressions like n/p or 2/s.

#pragma once

#include <stdexcept>
#include <string>

#include "nsra/rational.hpp"

namespace nsra {

class Exponent {
 public:
  /// Defaults to 1 (the smallest admissible Lebesgue exponent).
  Exponent() : value_(1) {}
  Exponent(const Rational& v) : value_(v) { check_positive(); }  // NOLINT(google-explicit-constructor)
  Exponent(std::int64_t v) : value_(v) { check_positive(); }     // NOLINT(google-explicit-constructor)

  static Exponent inf() {
    Exponent e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// Finite value; throws std::domain_error when infinite.
  const Rational& finite_value() const {
    if (inf_) throw std::domain_error("exponent is infinite");
    return value_;
  }

  /// Exact reciprocal: 1/p, equal to 0 when p = inf.
  Rational recip() const { return inf_ ? Rational(0) : Rational(1) / value_; }

  double to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : value_.to_double();
  }

  /// "inf" or the lowest-terms rational form.
  std::string str() const { return inf_ ? "inf" : value_.str(); }
  /// Parses "inf" (case-insensitive) or a rational "a/b"/"a" > 0.
  static Exponent parse(const std::string& text);

  /// Multiplies a finite exponent by a positive rational; infinity is absorbing.
  Exponent scaled(const Rational& factor) const {
    if (factor <= Rational(0)) throw std::domain_error("exponent scale factor must be positive");
    return inf_ ? *this : Exponent(value_ * factor);
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Exponent& a, const Exponent& b) { return b < a; }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return !(b < a); }
  friend bool operator>=(const Exponent& a, const Exponent& b) { return !(a < b); }

 private:
  void check_positive() const {
    if (value_ <= Rational(0)) throw std::domain_error("exponent must be positive");
  }

  bool inf_ = false;
  Rational value_;
};

inline Exponent half(const Exponent& e) { return e.scaled(Rational(1, 2)); }
inline Exponent twice(const Exponent& e) { return e.scaled(Rational(2)); }

/// Inverse of Exponent::recip: maps r > 0 to 1/r and r = 0 to infinity.
/// Throws std::domain_error for negative input (no exponent has a negative
/// reciprocal).
inline Exponent exponent_from_recip(const Rational& r) {
  if (r < Rational(0)) throw std::domain_error("negative reciprocal has no exponent");
  if (r == Rational(0)) return Exponent::inf();
  return Exponent(Rational(1) / r);
}

}  // namespace nsra
