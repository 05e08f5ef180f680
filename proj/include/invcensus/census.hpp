#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invcensus/family.hpp"
#include "invcensus/group.hpp"

namespace invcensus {

struct CatalogEntry {
  std::string id;
  FamilyId family;
  std::uint64_t expected_order = 0;
  std::string iso_class;  // empty when the entry has no recorded isomorphism
};

/// Constructible simple groups of order <= max_order, sorted by
/// (expected_order, id).
std::vector<CatalogEntry> build_catalog(std::uint64_t max_order);

/// Everything the scanners need about one group; also the cache payload.
struct SpectrumRecord {
  std::string id;
  std::uint64_t order = 0;
  OrderSpectrum spectrum;
  /// (class size, centralizer order), sorted by class size.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> involution_classes;

  bool operator==(const SpectrumRecord&) const = default;
};

inline constexpr int kSpectrumFormatVersion = 1;

SpectrumRecord compute_spectrum_record(const Group& g);
SpectrumRecord compute_spectrum_record(const FamilyId& id, std::uint64_t cap = kDefaultCap);

std::string spectrum_record_to_json(const SpectrumRecord& record);
/// nullopt on malformed input or a format-version mismatch.
std::optional<SpectrumRecord> spectrum_record_from_json(const std::string& text);

/// Internal consistency plus agreement with the family's order formula.
bool spectrum_record_is_consistent(const SpectrumRecord& record, const FamilyId& family);

/// `<dir>/<group-id>.spectrum.json`; writes go through a temporary file and
/// a rename.
class SpectrumCache {
 public:
  explicit SpectrumCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& id) const;

  /// The cached record, or nullopt if absent, unreadable or inconsistent.
  std::optional<SpectrumRecord> load(const FamilyId& family) const;
  void store(const SpectrumRecord& record) const;

 private:
  std::filesystem::path dir_;
};

struct CensusOptions {
  std::optional<std::filesystem::path> cache_dir;  // nullopt disables the cache
  unsigned workers = 1;
  std::uint64_t cap = kDefaultCap;
};

/// Cache-aware single record.
SpectrumRecord obtain_record(const FamilyId& family, const CensusOptions& options);

/// One record per entry, in entry order. Entries are processed by
/// `options.workers` threads; the result does not depend on the count.
std::vector<SpectrumRecord> obtain_records(std::span<const CatalogEntry> entries, const CensusOptions& options);

}  // namespace invcensus
