#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "invcensus/element_ops.hpp"

namespace invcensus {

inline constexpr std::uint64_t kDefaultCap = 5'000'000;

/// A fully enumerated finite group. Elements are stored as canonical keys in
/// ascending order, so element indices are deterministic.
class Group {
 public:
  const std::string& id() const { return id_; }
  ElementKind kind() const { return ops_->kind(); }
  std::uint64_t order() const { return elements_.size(); }

  std::span<const ElementKey> elements() const { return elements_; }
  std::span<const ElementKey> generators() const { return generators_; }
  ElementKey element(std::uint32_t index) const { return elements_[index]; }

  const ElementOps& ops() const { return *ops_; }
  const std::shared_ptr<const ElementOps>& shared_ops() const { return ops_; }

  ElementKey identity() const { return ops_->identity(); }
  ElementKey multiply(ElementKey a, ElementKey b) const { return ops_->multiply(a, b); }
  ElementKey inverse(ElementKey a) const { return ops_->inverse(a); }

  std::optional<std::uint32_t> index_of(ElementKey key) const;
  /// Throws if the key is not a member.
  std::uint32_t index(ElementKey key) const;
  bool contains(ElementKey key) const { return index_.contains(key); }

 private:
  friend Group enumerate_closure(std::string, std::shared_ptr<const ElementOps>, std::vector<ElementKey>,
                                 std::uint64_t);

  std::string id_;
  std::shared_ptr<const ElementOps> ops_;
  std::vector<ElementKey> generators_;
  std::vector<ElementKey> elements_;
  absl::flat_hash_map<ElementKey, std::uint32_t> index_;
};

/// Breadth-first closure of {identity} and the generators under right
/// multiplication by generators and their inverses.
Group enumerate_closure(std::string id, std::shared_ptr<const ElementOps> ops, std::vector<ElementKey> generators,
                        std::uint64_t cap = kDefaultCap);

/// Least m >= 1 with x^m = identity, by repeated multiplication.
std::uint64_t element_order(const Group& g, ElementKey x);

/// Orders of all elements, indexed like Group::elements(). Each power chain
/// x, x^2, ..., x^m = 1 also fixes ord(x^i) = m / gcd(i, m).
std::vector<std::uint32_t> element_orders(const Group& g);

struct OrderSpectrum {
  std::map<std::uint64_t, std::uint64_t> entries;  // k -> I_k, zero counts absent
  std::uint64_t group_order = 0;

  std::uint64_t count(std::uint64_t k) const;
  /// Primes p with an element of order p.
  std::vector<std::uint64_t> primes() const;

  bool operator==(const OrderSpectrum&) const = default;
};

OrderSpectrum order_spectrum(const Group& g);
OrderSpectrum spectrum_from_orders(std::span<const std::uint32_t> orders);
std::uint64_t involution_count(const Group& g);

struct ConjugacyClass {
  ElementKey representative;  // smallest key in the class
  std::uint64_t size;
  std::uint64_t centralizer_order;
};

struct ClassPartition {
  std::vector<ConjugacyClass> classes;  // sorted by (size, representative)
  std::vector<std::uint32_t> class_of;  // element index -> position in classes
};

ClassPartition class_partition(const Group& g);
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

/// |G| / |class of x|.
std::uint64_t centralizer_order(const Group& g, ElementKey x);
/// Counts y in G with xy = yx directly. Verification only; O(|G|).
std::uint64_t direct_centralizer_order(const Group& g, ElementKey x);

struct InvolutionClass {
  ElementKey representative;
  std::uint64_t class_size;
  std::uint64_t centralizer_order;
};

struct InvolutionClassReport {
  std::uint64_t group_order = 0;
  std::vector<InvolutionClass> classes;  // sorted by (class_size, representative)

  std::size_t k2() const { return classes.size(); }
  std::uint64_t total_involutions() const;
  /// Sum of |G| / |C_G(t_i)| over the class representatives.
  std::uint64_t centralizer_index_sum() const;
};

InvolutionClassReport involution_class_decomposition(const Group& g);
InvolutionClassReport involution_class_decomposition(const Group& g, std::span<const std::uint32_t> orders);

}  // namespace invcensus
