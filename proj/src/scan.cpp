#include "invcensus/scan.hpp"

#include <algorithm>
#include <set>

#include "invcensus/error.hpp"

namespace invcensus {

namespace {

void require_aligned(std::span<const CatalogEntry> catalog, std::span<const SpectrumRecord> records) {
  if (catalog.size() != records.size())
    throw Error(ErrorKind::VerificationFailed, "catalog and spectrum records differ in length");
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (catalog[i].id != records[i].id)
      throw Error(ErrorKind::VerificationFailed, "spectrum record " + records[i].id + " does not match " + catalog[i].id);
}

std::vector<std::uint64_t> odd_prime_matches(const SpectrumRecord& a, const SpectrumRecord& b) {
  std::vector<std::uint64_t> out;
  for (auto p : a.spectrum.primes()) {
    if (p == 2 || b.order % p != 0) continue;
    if (a.spectrum.count(p) == b.spectrum.count(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<CollisionRecord> herzog_collision_scan(std::span<const CatalogEntry> catalog,
                                                   std::span<const SpectrumRecord> records) {
  require_aligned(catalog, records);
  std::vector<std::size_t> reps;
  std::set<std::string> seen_classes;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& iso = catalog[i].iso_class;
    if (!iso.empty() && !seen_classes.insert(iso).second) continue;
    reps.push_back(i);
  }

  std::vector<CollisionRecord> out;
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (std::size_t y = x + 1; y < reps.size(); ++y) {
      const auto& a = records[reps[x]];
      const auto& b = records[reps[y]];
      const auto i2 = a.spectrum.count(2);
      if (i2 != b.spectrum.count(2)) continue;
      out.push_back({a.id, b.id, i2, a.order, b.order, a.order == b.order, odd_prime_matches(a, b)});
    }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return std::tie(l.i2, l.id_a, l.id_b) < std::tie(r.i2, r.id_a, r.id_b);
  });
  return out;
}

std::vector<CollisionRecord> herzog_collision_scan(std::span<const CatalogEntry> catalog,
                                                   const CensusOptions& options) {
  const auto records = obtain_records(catalog, options);
  return herzog_collision_scan(catalog, records);
}

std::vector<CollisionRecord> conjecture15_scan(std::span<const CatalogEntry> catalog,
                                               std::span<const SpectrumRecord> records) {
  auto all = herzog_collision_scan(catalog, records);
  std::erase_if(all, [](const auto& r) { return r.odd_prime_matches.empty(); });
  return all;
}

std::vector<CollisionRecord> conjecture15_scan(std::span<const CatalogEntry> catalog, const CensusOptions& options) {
  const auto records = obtain_records(catalog, options);
  return conjecture15_scan(catalog, records);
}

std::vector<PrimePair> zar_distinctness_check(const OrderSpectrum& spectrum) {
  const auto primes = spectrum.primes();
  std::vector<PrimePair> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (spectrum.count(primes[i]) == spectrum.count(primes[j])) out.emplace_back(primes[i], primes[j]);
  return out;
}

std::vector<PrimePair> zar_distinctness_check(const Group& g) { return zar_distinctness_check(order_spectrum(g)); }

std::vector<ZarReport> zar_scan(std::span<const CatalogEntry> catalog, std::span<const SpectrumRecord> records) {
  require_aligned(catalog, records);
  std::vector<ZarReport> out;
  for (const auto& r : records) {
    ZarReport z{r.id, r.order, {}, zar_distinctness_check(r.spectrum)};
    for (auto p : r.spectrum.primes()) z.prime_counts.emplace_back(p, r.spectrum.count(p));
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace invcensus
