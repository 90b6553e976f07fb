#include "gutsbound/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace gutsbound::numerics {

namespace {

constexpr int kZetaTableSize = 32;

// zeta(s) for even integer s >= 2: direct sum to K plus Euler-Maclaurin
// tail corrections. For s = 2 and K = 256 the first dropped correction is
// below 1e-23, far under double roundoff.
double zeta_direct(int s) {
  constexpr int K = 256;
  double sum = 0.0;
  for (int k = K - 1; k >= 1; --k) sum += std::pow(double(k), -double(s));
  const double ks = std::pow(double(K), -double(s));
  const double sd = double(s);
  sum += double(K) * ks / (sd - 1.0);  // integral tail
  sum += 0.5 * ks;
  sum += sd * ks / (12.0 * K);
  sum -= sd * (sd + 1.0) * (sd + 2.0) * ks / (720.0 * K * K * K);
  sum += sd * (sd + 1.0) * (sd + 2.0) * (sd + 3.0) * (sd + 4.0) * ks /
         (30240.0 * K * K * K * K * K);
  return sum;
}

const std::array<double, kZetaTableSize + 1>& zeta_table() {
  static const std::array<double, kZetaTableSize + 1> table = [] {
    std::array<double, kZetaTableSize + 1> t{};
    for (int n = 1; n <= kZetaTableSize; ++n) t[std::size_t(n)] = zeta_direct(2 * n);
    return t;
  }();
  return table;
}

}  // namespace

double zeta_even(int n) {
  if (n < 1 || n > kZetaTableSize) throw Error("zeta_even index out of table range");
  return zeta_table()[std::size_t(n)];
}

double lobachevsky(Angle theta, double tolerance, int max_terms) {
  if (!(tolerance > 0.0)) throw Error("lobachevsky tolerance must be positive");
  if (!std::isfinite(theta.radians)) throw Error("lobachevsky angle must be finite");

  constexpr double pi = std::numbers::pi;
  double t = std::remainder(theta.radians, pi);  // lands in [-pi/2, pi/2]
  if (t == -pi / 2) t = pi / 2;
  if (t == 0.0) return 0.0;

  double acc = t - t * std::log(std::abs(2.0 * t));
  const double ratio = (t / pi) * (t / pi);
  double power = ratio;  // (t/pi)^(2n)
  const int cap = std::min(max_terms, kZetaTableSize);
  for (int n = 1; n <= cap; ++n) {
    const double term = zeta_even(n) * t * power / (double(n) * double(2 * n + 1));
    acc += term;
    if (std::abs(term) < tolerance / 10.0) return acc;
    power *= ratio;
  }
  throw NonConvergence("lobachevsky series did not reach tolerance within term cap");
}

double v8() {
  static const double value = 8.0 * lobachevsky(Angle{std::numbers::pi / 4.0}, 1e-15);
  return value;
}

}  // namespace gutsbound::numerics
