#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "gutsbound/rational.hpp"

namespace gutsbound::core {

// Cone order n >= 2 at a singular point. Orders above the runtime cap are
// rejected so exact denominators stay in range.
class ConeLabel {
 public:
  explicit ConeLabel(long value);

  long value() const { return value_; }
  auto operator<=>(const ConeLabel&) const = default;

  static long max_order();
  static void set_max_order(long cap);

 private:
  long value_;
};

// Closed orientable 2-orbifold with sphere base; cone orders stored sorted
// ascending, so equality is multiset equality.
class SphereOrbifold {
 public:
  SphereOrbifold() = default;
  explicit SphereOrbifold(std::vector<ConeLabel> orders);
  static SphereOrbifold of(std::initializer_list<long> orders);

  const std::vector<ConeLabel>& cone_orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }
  bool operator==(const SphereOrbifold&) const = default;
  auto operator<=>(const SphereOrbifold&) const = default;

  std::string str() const;  // "S2(2,3,3,3)"

 private:
  std::vector<ConeLabel> orders_;
};

// Disk with mirrored boundary and two interior cone points; unordered pair.
class MirroredDiskOrbifold {
 public:
  MirroredDiskOrbifold(ConeLabel n1, ConeLabel n2);
  static MirroredDiskOrbifold of(long n1, long n2);

  ConeLabel n1() const { return n1_; }
  ConeLabel n2() const { return n2_; }
  bool operator==(const MirroredDiskOrbifold&) const = default;

  std::string str() const;  // "D2*(3,5)"

 private:
  ConeLabel n1_, n2_;  // n1 <= n2
};

enum class TripleClass { Spherical, RigidEuclidean, Hyperbolic };

// Ordered cone orders at the four marked points of the splitting surface.
// Order matters: pairings and gluing permutations index into it.
using LabelQuadruple = std::array<ConeLabel, 4>;

LabelQuadruple quadruple_of(std::initializer_list<long> orders);
LabelQuadruple sorted_quadruple(const SphereOrbifold& s);  // requires size 4
SphereOrbifold multiset_of(const LabelQuadruple& q);
std::string quadruple_str(const LabelQuadruple& q);  // "(2,3,3,3)"

ExactRational euler_sphere(const SphereOrbifold& s);
ExactRational euler_mirrored_disk(const MirroredDiskOrbifold& d);
TripleClass classify_triple(ConeLabel p, ConeLabel q, ConeLabel r);
SphereOrbifold double_of_mirrored_disk(const MirroredDiskOrbifold& d);

const char* triple_class_name(TripleClass c);

}  // namespace gutsbound::core
