#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>

#include "invcensus/census.hpp"
#include "invcensus/family.hpp"
#include "invcensus/herzog.hpp"
#include "invcensus/scan.hpp"

using namespace invcensus;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("invcensus-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<std::string> ids(const std::vector<CatalogEntry>& catalog) {
  std::vector<std::string> out;
  for (const auto& e : catalog) out.push_back(e.id);
  return out;
}

const CollisionRecord* find(const std::vector<CollisionRecord>& records, const std::string& a, const std::string& b) {
  for (const auto& r : records)
    if (r.id_a == a && r.id_b == b) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("catalog bounds") {
  CHECK(build_catalog(59).empty());
  const auto small = build_catalog(60);
  CHECK(ids(small) == std::vector<std::string>{"alt:5", "psl2:4", "psl2:5"});
  for (const auto& e : small) CHECK(e.iso_class == "A5");

  const auto full = build_catalog(1'000'000);
  const auto names = ids(full);
  for (const char* needed : {"psp4:3", "psl3:4", "alt:8", "m11", "m12", "psu3:5", "psl2:125", "alt:9"})
    CHECK(std::ranges::count(names, needed) == 1);
  CHECK(std::ranges::count(names, "alt:10") == 0);  // 1814400 > 10^6
  CHECK(std::is_sorted(full.begin(), full.end(), [](const auto& a, const auto& b) {
    return std::tie(a.expected_order, a.id) < std::tie(b.expected_order, b.id);
  }));
}

TEST_CASE("catalog orders agree with the formulas and isoClasses share orders") {
  const auto catalog = build_catalog(10'000'000);
  std::map<std::string, std::uint64_t> iso_order;
  for (const auto& e : catalog) {
    CHECK(e.expected_order == group_order_formula(e.family));
    CHECK(format_group_id(e.family) == e.id);
    if (e.iso_class.empty()) continue;
    auto [it, inserted] = iso_order.emplace(e.iso_class, e.expected_order);
    CHECK(it->second == e.expected_order);
  }
  CHECK(iso_order.size() == 4);
}

TEST_CASE("spectrum records round-trip through JSON") {
  const auto record = compute_spectrum_record(parse_group_id("psl2:7"));
  CHECK(record.order == 168);
  CHECK(record.spectrum.count(2) == 21);
  CHECK(record.involution_classes == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{21, 8}});
  const auto text = spectrum_record_to_json(record);
  const auto back = spectrum_record_from_json(text);
  REQUIRE(back.has_value());
  CHECK(*back == record);
  CHECK(spectrum_record_is_consistent(record, parse_group_id("psl2:7")));
  CHECK_FALSE(spectrum_record_is_consistent(record, parse_group_id("psl2:8")));
  CHECK_FALSE(spectrum_record_from_json("{").has_value());
  CHECK_FALSE(spectrum_record_from_json("[]").has_value());
}

TEST_CASE("cache stores, reloads and regenerates corrupt files") {
  TempDir dir;
  const auto family = parse_group_id("alt:6");
  CensusOptions options;
  options.cache_dir = dir.path;
  const SpectrumCache cache(dir.path);
  CHECK_FALSE(cache.load(family).has_value());

  const auto cold = obtain_record(family, options);
  REQUIRE(fs::exists(cache.path_for("alt:6")));
  const auto loaded = cache.load(family);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == cold);
  CHECK(obtain_record(family, options) == cold);

  // Truncated file.
  {
    std::ofstream out(cache.path_for("alt:6"), std::ios::trunc);
    out << "{\"id\": \"alt:6\", ";
  }
  CHECK_FALSE(cache.load(family).has_value());
  CHECK(obtain_record(family, options) == cold);
  CHECK(cache.load(family).has_value());

  // Well-formed but wrong order.
  auto bad = cold;
  bad.order = 361;
  bad.spectrum.entries[1] = 2;
  cache.store(bad);
  CHECK_FALSE(cache.load(family).has_value());
  CHECK(obtain_record(family, options) == cold);

  // Wrong format version.
  {
    auto text = spectrum_record_to_json(cold);
    const auto pos = text.find("\"formatVersion\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 18, "\"formatVersion\": 0");
    std::ofstream out(cache.path_for("alt:6"), std::ios::trunc);
    out << text;
  }
  CHECK_FALSE(cache.load(family).has_value());

  for (const auto& entry : fs::directory_iterator(dir.path))
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
}

TEST_CASE("scan results do not depend on worker count or cache state") {
  const auto catalog = build_catalog(30'000);
  CensusOptions serial;
  serial.workers = 1;
  const auto reference = obtain_records(catalog, serial);
  REQUIRE(reference.size() == catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) CHECK(reference[i].order == catalog[i].expected_order);

  TempDir dir;
  CensusOptions parallel;
  parallel.workers = 3;
  parallel.cache_dir = dir.path;
  CHECK(obtain_records(catalog, parallel) == reference);
  CHECK(obtain_records(catalog, parallel) == reference);  // warm

  const auto collisions = herzog_collision_scan(catalog, reference);
  CHECK(herzog_collision_scan(catalog, parallel) == collisions);
  CHECK(std::is_sorted(collisions.begin(), collisions.end(), [](const auto& a, const auto& b) {
    return std::tie(a.i2, a.id_a, a.id_b) < std::tie(b.i2, b.id_a, b.id_b);
  }));

  const auto* cex = find(collisions, "psl3:4", "psp4:3");
  REQUIRE(cex != nullptr);
  CHECK(cex->i2 == 315);
  CHECK_FALSE(cex->same_order);
  CHECK(refutes_collision_conjecture(*cex));
  for (auto p : cex->odd_prime_matches) CHECK((p == 3 || p == 5));

  const auto* a8 = find(collisions, "alt:8", "psl3:4");
  REQUIRE(a8 != nullptr);
  CHECK(a8->same_order);
  CHECK_FALSE(refutes_conjecture15(*a8));
}

TEST_CASE("collision records re-verify against the records") {
  const auto catalog = build_catalog(30'000);
  CensusOptions options;
  const auto records = obtain_records(catalog, options);
  std::map<std::string, const SpectrumRecord*> by_id;
  for (const auto& r : records) by_id[r.id] = &r;
  for (const auto& c : herzog_collision_scan(catalog, records)) {
    const auto& a = *by_id.at(c.id_a);
    const auto& b = *by_id.at(c.id_b);
    CHECK(a.spectrum.count(2) == c.i2);
    CHECK(b.spectrum.count(2) == c.i2);
    CHECK(c.order_a == a.order);
    CHECK(c.order_b == b.order);
    CHECK(c.same_order == (a.order == b.order));
    for (std::uint64_t p = 3; p < 100; p += 2) {
      const bool common = a.order % p == 0 && b.order % p == 0 && a.spectrum.count(p) > 0;
      const bool match = common && a.spectrum.count(p) == b.spectrum.count(p);
      CHECK(std::ranges::count(c.odd_prime_matches, p) == (match ? 1 : 0));
    }
  }
}

TEST_CASE("isoClass members are suppressed") {
  const auto catalog = build_catalog(60);
  CensusOptions options;
  const auto collisions = herzog_collision_scan(catalog, options);
  CHECK(collisions.empty());
  CHECK(conjecture15_scan(catalog, options).empty());
  CHECK(conjecture15_scan(std::span<const CatalogEntry>{}, std::span<const SpectrumRecord>{}).empty());

  const auto wider = build_catalog(400);  // A5 class plus the PSL(2,7) class and psl2:8
  for (const auto& c : herzog_collision_scan(wider, options)) {
    CHECK(c.id_a != "psl2:4");
    CHECK(c.id_b != "psl2:5");
    CHECK(c.id_b != "psl2:7");
  }
}

TEST_CASE("Zar distinctness examples") {
  const auto a5 = build_group(parse_group_id("alt:5"));
  CHECK(zar_distinctness_check(a5).empty());
  const auto l27 = build_group(parse_group_id("psl2:7"));
  CHECK(zar_distinctness_check(l27).empty());

  OrderSpectrum crafted;
  crafted.group_order = 60;
  crafted.entries = {{1, 1}, {2, 24}, {3, 20}, {5, 24}};
  CHECK(zar_distinctness_check(crafted) == std::vector<PrimePair>{{2, 5}});

  const auto catalog = build_catalog(1000);
  CensusOptions options;
  const auto records = obtain_records(catalog, options);
  const auto reports = zar_scan(catalog, records);
  REQUIRE(reports.size() == catalog.size());
  for (const auto& r : reports) CHECK(r.violations.empty());
  CHECK(reports[0].prime_counts == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 15}, {3, 20}, {5, 24}});
}
