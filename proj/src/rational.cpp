#include "gutsbound/rational.hpp"

#include <cctype>

namespace gutsbound::core {

namespace {

using Int = ExactRational::Int;
using UInt = unsigned __int128;

UInt uabs(Int v) { return v < 0 ? UInt(0) - UInt(v) : UInt(v); }

UInt ugcd(UInt a, UInt b) {
  while (b != 0) {
    UInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational addition overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational multiplication overflow");
  return r;
}

}  // namespace

ExactRational ExactRational::make(Int n, Int d) {
  constexpr Int kMin = Int(UInt(1) << 127);
  if (d == 0) throw Error("rational with zero denominator");
  if (d < 0) {
    if (n == kMin || d == kMin) throw OverflowError("rational negation overflow");
    n = -n;
    d = -d;
  }
  UInt g = ugcd(uabs(n), UInt(d));
  if (g > 1) {
    n = n < 0 ? -Int(uabs(n) / g) : Int(UInt(n) / g);
    d = Int(UInt(d) / g);
  }
  return ExactRational(n, d, 0);
}

ExactRational::ExactRational(long long numerator, long long denominator) {
  *this = make(Int(numerator), Int(denominator));
}

ExactRational ExactRational::from_parts(Int numerator, Int denominator) {
  return make(numerator, denominator);
}

ExactRational ExactRational::operator-() const { return ExactRational(-num_, den_, 0); }

ExactRational ExactRational::operator+(const ExactRational& o) const {
  // a/b + c/d over lcm(b,d) keeps intermediates as small as possible
  UInt g = ugcd(UInt(den_), UInt(o.den_));
  Int od = Int(UInt(o.den_) / g);
  Int sd = Int(UInt(den_) / g);
  Int n = checked_add(checked_mul(num_, od), checked_mul(o.num_, sd));
  Int d = checked_mul(den_, od);
  return make(n, d);
}

ExactRational ExactRational::operator-(const ExactRational& o) const { return *this + (-o); }

ExactRational ExactRational::operator*(const ExactRational& o) const {
  // cross-reduce before multiplying
  UInt g1 = ugcd(uabs(num_), UInt(o.den_));
  UInt g2 = ugcd(uabs(o.num_), UInt(den_));
  Int n1 = num_ < 0 ? -Int(uabs(num_) / g1) : Int(UInt(num_) / g1);
  Int n2 = o.num_ < 0 ? -Int(uabs(o.num_) / g2) : Int(UInt(o.num_) / g2);
  Int d1 = Int(UInt(den_) / g2);
  Int d2 = Int(UInt(o.den_) / g1);
  return ExactRational(checked_mul(n1, n2), checked_mul(d1, d2), 0);
}

ExactRational ExactRational::operator/(const ExactRational& o) const {
  if (o.num_ == 0) throw Error("rational division by zero");
  Int n = o.num_ < 0 ? -o.den_ : o.den_;
  Int d = Int(uabs(o.num_));
  return *this * ExactRational(n, d, 0);
}

std::strong_ordering ExactRational::operator<=>(const ExactRational& o) const {
  Int lhs = checked_mul(num_, o.den_);
  Int rhs = checked_mul(o.num_, den_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ExactRational::to_double() const {
  return double(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string ExactRational::str() const {
  std::string s = int128_str(num_);
  if (den_ != 1) {
    s += '/';
    s += int128_str(den_);
  }
  return s;
}

ExactRational ExactRational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw Error("empty rational component");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw Error("malformed rational: '" + std::string(s) + "'");
    Int v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error("malformed rational: '" + std::string(s) + "'");
      v = checked_add(checked_mul(v, 10), Int(s[i] - '0'));
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make(parse_int(text), 1);
  return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string int128_str(__int128 value) {
  if (value == 0) return "0";
  bool neg = value < 0;
  UInt u = neg ? UInt(0) - UInt(value) : UInt(value);
  char buf[48];
  int i = 48;
  while (u != 0) {
    buf[--i] = char('0' + int(u % 10));
    u /= 10;
  }
  if (neg) buf[--i] = '-';
  return std::string(buf + i, 48 - i);
}

}  // namespace gutsbound::core
