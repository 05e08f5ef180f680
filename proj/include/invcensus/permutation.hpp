#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invcensus/element_ops.hpp"

namespace invcensus {

/// Bijection of {0, ..., d-1}; images[i] is the image of point i.
class Permutation {
 public:
  static Permutation identity(unsigned degree);
  /// Parses disjoint-cycle notation such as "(0 1)(2 3 4)"; "()" is the
  /// identity. Commas may separate points.
  static Permutation from_cycles(unsigned degree, std::string_view cycles);
  static Permutation from_images(std::vector<std::uint8_t> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned point) const { return images_[point]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_even() const;
  std::string to_cycles() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {}

  std::vector<std::uint8_t> images_;
};

/// i -> a(b(i)): the right factor acts first.
Permutation perm_compose(const Permutation& a, const Permutation& b);
Permutation perm_inverse(const Permutation& a);
/// lcm of the cycle lengths.
std::uint64_t perm_order(const Permutation& p);

struct SporadicGenerators {
  std::string name;
  unsigned degree;
  std::uint64_t expected_order;
  std::vector<Permutation> generators;
};

/// Parses the `<name> <degree> <expected_order> <perm>;<perm>...` format.
/// Blank lines and lines starting with '#' are skipped.
std::vector<SporadicGenerators> parse_sporadic_generators(std::string_view text);

/// The generator table compiled into the library from
/// data/sporadic_generators.txt.
const std::vector<SporadicGenerators>& builtin_sporadic_generators();

/// Generators for "alt:<n>" (3 <= n <= 10), "cyclic:2", "m11", "m12".
std::vector<Permutation> standard_generators(std::string_view name);

inline constexpr unsigned kMaxPermDegree = 16;

class PermutationOps final : public ElementOps {
 public:
  explicit PermutationOps(unsigned degree);

  ElementKind kind() const override { return ElementKind::Permutation; }
  ElementKey identity() const override { return identity_; }
  ElementKey multiply(ElementKey a, ElementKey b) const override;
  ElementKey inverse(ElementKey a) const override;
  std::vector<std::uint8_t> encoding(ElementKey a) const override;
  std::string describe(ElementKey a) const override;

  ElementKey encode(const Permutation& p) const;
  Permutation decode(ElementKey key) const;
  unsigned degree() const { return degree_; }

 private:
  unsigned degree_;
  ElementKey identity_;
};

}  // namespace invcensus
