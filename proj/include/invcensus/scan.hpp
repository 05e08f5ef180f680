#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invcensus/census.hpp"
#include "invcensus/group.hpp"

namespace invcensus {

struct CollisionRecord {
  std::string id_a;
  std::string id_b;
  std::uint64_t i2 = 0;
  std::uint64_t order_a = 0;
  std::uint64_t order_b = 0;
  bool same_order = false;
  /// Odd primes p dividing both orders with I_p(A) = I_p(B).
  std::vector<std::uint64_t> odd_prime_matches;

  bool operator==(const CollisionRecord&) const = default;
};

/// Pairs of catalog groups with equal involution counts. Only the first
/// member (in catalog order) of each isoClass takes part. idA precedes idB in
/// catalog order; output sorted by (i2, idA, idB).
std::vector<CollisionRecord> herzog_collision_scan(std::span<const CatalogEntry> catalog,
                                                   std::span<const SpectrumRecord> records);
std::vector<CollisionRecord> herzog_collision_scan(std::span<const CatalogEntry> catalog,
                                                   const CensusOptions& options);

/// Collision records with at least one odd-prime match.
std::vector<CollisionRecord> conjecture15_scan(std::span<const CatalogEntry> catalog,
                                               std::span<const SpectrumRecord> records);
std::vector<CollisionRecord> conjecture15_scan(std::span<const CatalogEntry> catalog, const CensusOptions& options);

/// A sameOrder=false collision contradicts the involution-count conjecture.
inline bool refutes_collision_conjecture(const CollisionRecord& r) { return !r.same_order; }
/// A sameOrder=false record with an odd-prime match contradicts the
/// strengthened conjecture.
inline bool refutes_conjecture15(const CollisionRecord& r) {
  return !r.same_order && !r.odd_prime_matches.empty();
}

using PrimePair = std::pair<std::uint64_t, std::uint64_t>;

/// Unordered pairs {p, r} of distinct primes of pi(G) with I_p = I_r.
std::vector<PrimePair> zar_distinctness_check(const OrderSpectrum& spectrum);
std::vector<PrimePair> zar_distinctness_check(const Group& g);

struct ZarReport {
  std::string id;
  std::uint64_t order = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_counts;  // (p, I_p)
  std::vector<PrimePair> violations;

  bool operator==(const ZarReport&) const = default;
};

std::vector<ZarReport> zar_scan(std::span<const CatalogEntry> catalog, std::span<const SpectrumRecord> records);

}  // namespace invcensus
