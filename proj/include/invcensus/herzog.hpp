#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invcensus/family.hpp"
#include "invcensus/group.hpp"

namespace invcensus {

/// One row of the involution-count theorem instantiated at a parameter.
struct TheoremRow {
  FamilyId family;
  std::uint64_t predicted_involutions = 0;
  int epsilon = 0;  // +1 / -1 for PSL2, 0 otherwise
  std::string condition;

  bool operator==(const TheoremRow&) const = default;
};

/// Involution count the theorem predicts for `family`. Throws
/// ConditionViolated when the family is not covered or its congruence
/// side-condition fails; no extrapolation outside the theorem.
TheoremRow predicted_involutions(const FamilyId& family);

/// Order of the simple group named by `family`.
std::uint64_t group_order_formula(const FamilyId& family);

/// Every theorem row consistent with I involutions. Requires I >= 1 and
/// I = 1 (mod 4); throws HypothesisViolated otherwise.
std::vector<TheoremRow> classify_by_involutions(std::uint64_t involutions);

struct CounterexampleReport {
  std::string group_a;
  std::string group_b;
  std::uint64_t i2_a = 0;
  std::uint64_t i2_b = 0;
  std::uint64_t order_a = 0;
  std::uint64_t order_b = 0;
  bool is_counterexample = false;
};

struct CounterexampleVerification {
  CounterexampleReport report;
  InvolutionClassReport classes_a;
  InvolutionClassReport classes_b;
};

/// Enumerates PSp(4,3) and PSL(3,4) and fills the report from the enumerated
/// counts. Throws VerificationFailed if the involution class structure is not
/// two classes with centralizers {576, 96} resp. one class whose centralizer
/// is the 2-part of |PSL(3,4)|.
CounterexampleVerification verify_counterexample(std::uint64_t cap = kDefaultCap);

}  // namespace invcensus
