/// @file rational_io.cpp
/// @brief Text round-trip for exact rationals and extended exponents.

#include <cctype>
#include <charconv>

#include "nsra/exponent.hpp"
#include "nsra/rational.hpp"

namespace nsra {

namespace {

std::int64_t parse_int64(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const std::string_view s = trimmed(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int64(s));
  const std::int64_t num = parse_int64(s.substr(0, slash));
  const std::int64_t den = parse_int64(s.substr(slash + 1));
  return Rational(num, den);
}

Exponent Exponent::parse(const std::string& text) {
  std::string_view s = trimmed(text);
  std::string lower(s);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "inf" || lower == "infinity") return Exponent::inf();
  return Exponent(Rational::parse(std::string(s)));
}

}  // namespace nsra
