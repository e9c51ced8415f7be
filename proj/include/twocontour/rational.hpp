#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twocontour {

// Non-negative rational kept in lowest terms. Velocities and formula values
// are compared exactly through this type; there is no floating point in the core.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {  // NOLINT(implicit)
    if (value < 0) throw std::domain_error("Rational: negative value");
  }
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den <= 0) throw std::domain_error("Rational: denominator must be positive");
    if (num < 0) throw std::domain_error("Rational: negative numerator");
    const std::int64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  constexpr bool operator==(const Rational&) const = default;
  constexpr std::strong_ordering operator<=>(const Rational& other) const {
    // both denominators positive, magnitudes bounded by cell counts
    return num_ * other.den_ <=> other.num_ * den_;
  }

  // "p/q", always with an explicit denominator ("1/1", "0/1").
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) {
      throw std::invalid_argument("Rational: expected p/q, got '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

private:
  static std::int64_t parse_int(std::string_view digits) {
    std::int64_t value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Rational: bad digit in '" + std::string(digits) + "'");
      }
      value = value * 10 + (c - '0');
    }
    return value;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// (v1, v2) for clusters 1 and 2. Ordered lexicographically so spectra sort deterministically.
struct VelocityPair {
  Rational v1;
  Rational v2;

  constexpr bool operator==(const VelocityPair&) const = default;
  constexpr auto operator<=>(const VelocityPair&) const = default;

  constexpr VelocityPair mirrored() const { return {v2, v1}; }
  std::string str() const { return "(" + v1.str() + "," + v2.str() + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const VelocityPair& v) { return os << v.str(); }

}  // namespace twocontour
