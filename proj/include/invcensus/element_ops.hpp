#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invcensus {

/// Packed canonical encoding of a group element. Numeric order on keys equals
/// lexicographic order on the element's canonical byte string.
using ElementKey = std::uint64_t;

enum class ElementKind { MatrixProjective, Permutation };

/// Arithmetic on packed elements of one ambient structure. Implementations are
/// immutable and safe to share between threads.
class ElementOps {
 public:
  virtual ~ElementOps() = default;

  virtual ElementKind kind() const = 0;
  virtual ElementKey identity() const = 0;
  virtual ElementKey multiply(ElementKey a, ElementKey b) const = 0;
  virtual ElementKey inverse(ElementKey a) const = 0;
  /// Canonical byte string (matrix: row-major base-p digits, constant term
  /// first; permutation: image vector).
  virtual std::vector<std::uint8_t> encoding(ElementKey a) const = 0;
  virtual std::string describe(ElementKey a) const = 0;
};

}  // namespace invcensus
