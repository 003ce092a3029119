/// @file rational.hpp
/// @brief Exact rational arithmetic used by the index-algebra layer.
///
/// Admissibility of an index tuple is decided by comparisons between
/// affine-rational expressions in weights and reciprocal Lebesgue exponents.
/// Floating point is never used for those decisions: every boundary case
/// (equalities, strict inequalities at endpoints) must resolve exactly.
/// Values are stored as int64 numerator/denominator in lowest terms with a
/// positive denominator; all intermediates go through 128-bit integers and
/// throw std::overflow_error instead of wrapping if a result ever leaves the
/// 64-bit range.  Index algebra stays at human scale, so in practice the
/// guard never fires; it exists so a failure would be loud.

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nsra {

namespace detail {

using int128 = __int128;

inline std::int64_t checked_int64(int128 v) {
  if (v > static_cast<int128>(std::numeric_limits<std::int64_t>::max()) ||
      v < static_cast<int128>(std::numeric_limits<std::int64_t>::min())) {
    throw std::overflow_error("rational arithmetic left the 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t integer) : num_(integer), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Lowest-terms text form: "4", "-1/2", "7/3".
  std::string str() const;
  /// Parses "a" or "a/b" (optionally signed); throws std::invalid_argument on
  /// anything else, including a zero denominator.
  static Rational parse(const std::string& text);

  Rational operator-() const {
    Rational r;
    r.num_ = detail::checked_int64(-static_cast<detail::int128>(num_));
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<detail::int128>(a.num_) * b.den_ +
                    static_cast<detail::int128>(b.num_) * a.den_,
                static_cast<detail::int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<detail::int128>(a.num_) * b.num_,
                static_cast<detail::int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<detail::int128>(a.num_) * b.den_,
                static_cast<detail::int128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<detail::int128>(a.num_) * b.den_ <
           static_cast<detail::int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

 private:
  static Rational make(detail::int128 num, detail::int128 den) {
    Rational r;
    r.assign128(num, den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    assign128(static_cast<detail::int128>(num), static_cast<detail::int128>(den));
  }

  void assign128(detail::int128 num, detail::int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const detail::int128 g = num == 0 ? den : detail::gcd128(num, den);
    num_ = detail::checked_int64(num / g);
    den_ = detail::checked_int64(den / g);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace nsra
