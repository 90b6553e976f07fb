#pragma once

#include <array>
#include <string>
#include <vector>

#include "gutsbound/orbifold.hpp"

namespace gutsbound::ibundles {

// The six orbifold interval bundles (F x [-1,1])/((x,y) ~ (phi(x), -y))
// whose boundary is a sphere with four cone points:
//
//   I   F = S2(a,a,b,b), phi a reflection exchanging the like-labeled pairs
//   II  F = S2(a,a,b,c), phi fixes b and c, exchanges the a's
//   III F = S2(a,b,c,d), phi fixes all four cone points
//   IV  F = disk with two interior cone points of order a, exchanged
//   V   F = disk with cone points a and b, both fixed
//   VI  the product F x I with F = D2(a,b)
enum class IBundleType { I, II, III, IV, V, VI };

class IBundleSpec {
 public:
  static IBundleSpec type_i(long a, long b);
  static IBundleSpec type_ii(long a, long b, long c);
  static IBundleSpec type_iii(long a, long b, long c, long d);
  static IBundleSpec type_iv(long a);
  static IBundleSpec type_v(long a, long b);
  static IBundleSpec type_vi(long a, long b);
  static IBundleSpec make(IBundleType type, const std::vector<long>& params);

  IBundleType type() const { return type_; }
  int param_count() const { return nparams_; }
  long param(int i) const { return params_[std::size_t(i)]; }
  std::vector<long> params() const;
  long max_param() const;

  bool operator==(const IBundleSpec&) const = default;
  auto operator<=>(const IBundleSpec&) const = default;

  std::string str() const;  // "II(3,4,5)"

 private:
  IBundleSpec(IBundleType t, std::array<long, 4> p, int n);

  IBundleType type_;
  std::array<long, 4> params_;  // canonical order per type; unused slots 0
  int nparams_;
};

// Cone orders of the quotient's boundary sphere.
core::SphereOrbifold boundary_cone_multiset(const IBundleSpec& spec);

// Every spec with all parameters <= param_bound, deduplicated (factories
// canonicalize parameter order).
std::vector<IBundleSpec> all_specs(long param_bound);

// Inverse lookup: the specs with params <= param_bound whose boundary
// multiset equals `required`.
std::vector<IBundleSpec> compatible_fills(const core::SphereOrbifold& required, long param_bound);

// Combinatorial summary of the singular locus inside the bundle: closed
// circles, arcs (by order), and trivalent vertices (by order triple).
struct SingularGraphSummary {
  std::vector<long> circle_labels;
  std::vector<long> arc_labels;
  std::vector<std::array<long, 3>> vertex_labels;  // each triple sorted

  bool operator==(const SingularGraphSummary&) const = default;
};

SingularGraphSummary interior_singular_description(const IBundleSpec& spec);

const char* ibundle_type_name(IBundleType t);
IBundleType ibundle_type_from_name(const std::string& name);

}  // namespace gutsbound::ibundles
