#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gutsbound {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact arithmetic left the 128-bit representable range.
struct OverflowError : Error {
  using Error::Error;
};

// A cone order outside [2, max_order].
struct InvalidLabel : Error {
  using Error::Error;
};

// An attested hypothesis cannot hold (e.g. the splitting surface has
// Euler characteristic zero, so no hyperbolic interior exists).
struct HypothesisViolation : Error {
  using Error::Error;
};

// A rational-tangle side makes the splitting surface compressible.
struct CompressibleSide : Error {
  using Error::Error;
};

// Hungry assembly was handed a side with positive guts contribution.
struct NotEmptyGuts : Error {
  using Error::Error;
};

// Boundary labels disagree under the gluing permutation.
struct LabelMismatch : Error {
  using Error::Error;
};

// Series evaluation hit its term cap before reaching tolerance.
struct NonConvergence : Error {
  using Error::Error;
};

// A side configuration failed validation; carries the violation codes.
struct InvalidConfiguration : Error {
  explicit InvalidConfiguration(std::vector<std::string> violation_codes)
      : Error("invalid side configuration: " + join(violation_codes)),
        codes(std::move(violation_codes)) {}

  std::vector<std::string> codes;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += ", ";
      out += s;
    }
    return out;
  }
};

}  // namespace gutsbound
