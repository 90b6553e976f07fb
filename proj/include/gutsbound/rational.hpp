#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "gutsbound/errors.hpp"

namespace gutsbound::core {

// Exact rational number, always in lowest terms with positive denominator.
// 128-bit components are wide enough for every Euler characteristic and
// bound coefficient built from cone orders up to the default cap (the lcm
// of four orders <= 10^6 stays below 2^127); anything wider throws
// OverflowError instead of wrapping.
class ExactRational {
 public:
  using Int = __int128;

  constexpr ExactRational() : num_(0), den_(1) {}
  ExactRational(long long numerator) : num_(numerator), den_(1) {}
  ExactRational(long long numerator, long long denominator);
  static ExactRational from_parts(Int numerator, Int denominator);

  // 1/n
  static ExactRational reciprocal_of(long long n) { return {1, n}; }

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

  ExactRational operator-() const;
  ExactRational operator+(const ExactRational& o) const;
  ExactRational operator-(const ExactRational& o) const;
  ExactRational operator*(const ExactRational& o) const;
  ExactRational operator/(const ExactRational& o) const;
  ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
  ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }

  bool operator==(const ExactRational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const ExactRational& o) const;

  double to_double() const;

  // "p/q", or just "p" for integers; parse() accepts both.
  std::string str() const;
  static ExactRational parse(std::string_view text);

 private:
  ExactRational(Int n, Int d, int) : num_(n), den_(d) {}  // pre-normalized
  static ExactRational make(Int n, Int d);

  Int num_;
  Int den_;
};

std::string int128_str(__int128 value);

}  // namespace gutsbound::core
