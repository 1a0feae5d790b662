#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "mapfold/errors.hpp"

namespace mapfold {

// Exact rational with 64-bit numerator/denominator, always in lowest terms
// with positive denominator. All arithmetic is checked: overflow throws
// OverflowError instead of wrapping. Comparisons never overflow (they go
// through 128-bit intermediates).
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d);

  // Accepts "p", "-p", "p/q" and decimal literals like "1.5" or "-0.25".
  static Rat parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const;
  Rat abs() const;

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rat& o) const;

  // Lowest terms, "p" when integral, "p/q" otherwise.
  std::string str() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// Least common multiple of denominators, used to rescale patterns to
// integer lengths before algorithmic work.
Rat lcm_denominator_scale(const Rat* begin, const Rat* end);

}  // namespace mapfold

template <>
struct std::hash<mapfold::Rat> {
  std::size_t operator()(const mapfold::Rat& r) const noexcept {
    std::size_t h = std::hash<std::int64_t>()(r.num());
    h ^= std::hash<std::int64_t>()(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
