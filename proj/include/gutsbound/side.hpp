#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gutsbound/ibundle.hpp"
#include "gutsbound/orbifold.hpp"

namespace gutsbound::splitting {

// Split of the four marked points into a designated pair and its
// complement. Indices are 0-based positions into a LabelQuadruple. The
// designated pair matters for the two-annuli configuration (it names the
// upper region); swapping roles gives a different Pairing value.
class Pairing {
 public:
  Pairing(int i, int j);

  std::array<int, 2> pair_ab() const { return ab_; }
  std::array<int, 2> pair_cd() const { return cd_; }
  Pairing swapped() const { return Pairing(cd_[0], cd_[1]); }

  // label values at the paired positions, sorted
  std::array<long, 2> labels_ab(const core::LabelQuadruple& q) const;
  std::array<long, 2> labels_cd(const core::LabelQuadruple& q) const;

  bool operator==(const Pairing&) const = default;

  // the three partitions with the designated pair containing position 0
  static const std::array<Pairing, 3>& partitions();
  // all six designated pairings
  static const std::array<Pairing, 6>& designated();

 private:
  std::array<int, 2> ab_;
  std::array<int, 2> cd_;
};

enum class RegionFillKind { Acylindrical, IBundle, SolidTorus };

// What fills a complementary region cut off by the essential annuli.
struct RegionFill {
  RegionFillKind kind = RegionFillKind::Acylindrical;
  std::optional<ibundles::IBundleSpec> bundle;  // engaged iff kind == IBundle

  static RegionFill acylindrical() { return {RegionFillKind::Acylindrical, std::nullopt}; }
  static RegionFill solid_torus() { return {RegionFillKind::SolidTorus, std::nullopt}; }
  static RegionFill i_bundle(const ibundles::IBundleSpec& spec) {
    return {RegionFillKind::IBundle, spec};
  }

  bool operator==(const RegionFill&) const = default;
};

enum class TangleKind { TwoStrand, HShape };

// No essential annulus: the side is pared acylindrical.
struct Acylindrical {
  bool operator==(const Acylindrical&) const = default;
};

// Ball with unknotted labeled strands (two strands, or five in an H).
struct RationalTangle {
  TangleKind kind = TangleKind::TwoStrand;
  bool operator==(const RationalTangle&) const = default;
};

// One essential nonsingular annulus. Its boundary circles split the
// surface into two disks holding the designated pairs; the solid torus it
// cuts off carries a single singular loop of order core_label, and `fill`
// describes the remaining region.
struct NonsingularAnnulus {
  Pairing pairing;
  core::ConeLabel core_label;
  RegionFill fill;
  bool operator==(const NonsingularAnnulus&) const = default;
};

// One or two essential order-(2,2) disk annuli separating the designated
// pairs, with n central arc order (n = 1 collapses the middle solid
// torus) and fills for the upper (pair_ab) and lower (pair_cd) regions.
struct TwoTwoAnnuli {
  Pairing pairing;
  long n = 1;
  RegionFill upper_fill;
  RegionFill lower_fill;
  bool operator==(const TwoTwoAnnuli&) const = default;
};

using SideConfiguration = std::variant<Acylindrical, RationalTangle, NonsingularAnnulus, TwoTwoAnnuli>;

struct Violation {
  std::string code;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks a candidate configuration against the admissibility constraints
// for one side of the splitting. Never throws. The two-annuli variant is
// accepted if either role assignment of its pairing validates.
ValidationReport validate_side(const SideConfiguration& cfg, const core::LabelQuadruple& boundary);
ValidationReport validate_side(const SideConfiguration& cfg, const core::SphereOrbifold& boundary);

// Allocation-free equivalent of validate_side(...).ok, for exhaustive sweeps.
bool is_valid_side(const SideConfiguration& cfg, const core::LabelQuadruple& boundary);

// Marker for the second side being a collar of the surface itself.
struct RegularNeighborhood {
  bool operator==(const RegularNeighborhood&) const = default;
};

using SecondSide = std::variant<SideConfiguration, RegularNeighborhood>;

bool is_rational_tangle(const SideConfiguration& cfg);
bool is_incompressible(const SideConfiguration& side0, const SideConfiguration& side1);
bool is_incompressible(const SideConfiguration& side0, const SecondSide& side1);

std::string side_variant_name(const SideConfiguration& cfg);

}  // namespace gutsbound::splitting
