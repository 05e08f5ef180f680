#include "invcensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>
#include <unistd.h>

#include "invcensus/error.hpp"
#include "invcensus/herzog.hpp"
#include "invcensus/number_theory.hpp"

namespace invcensus {

namespace {

void add_entry(std::vector<CatalogEntry>& out, std::uint64_t max_order, FamilyId family, std::string iso = {}) {
  const auto order = group_order_formula(family);
  if (order <= max_order) out.push_back({format_group_id(family), family, order, std::move(iso)});
}

}  // namespace

std::vector<CatalogEntry> build_catalog(std::uint64_t max_order) {
  std::vector<CatalogEntry> out;
  for (std::uint64_t n = 5; n <= 10; ++n) {
    std::string iso = n == 5 ? "A5" : n == 6 ? "A6" : n == 8 ? "A8=PSL(4,2)" : "";
    add_entry(out, max_order, {FamilyTag::ALT, n}, iso);
  }
  for (std::uint64_t q = 4; q <= 125; ++q) {
    if (!as_prime_power(q)) continue;
    std::string iso = (q == 4 || q == 5) ? "A5" : q == 9 ? "A6" : q == 7 ? "PSL(2,7)" : "";
    add_entry(out, max_order, {FamilyTag::PSL2, q}, iso);
  }
  for (std::uint64_t q : {2, 3, 4, 5}) add_entry(out, max_order, {FamilyTag::PSL3, q}, q == 2 ? "PSL(2,7)" : "");
  for (std::uint64_t q : {3, 4, 5}) add_entry(out, max_order, {FamilyTag::PSU3, q});
  add_entry(out, max_order, {FamilyTag::PSP4, 3});
  add_entry(out, max_order, {FamilyTag::M11, 0});
  add_entry(out, max_order, {FamilyTag::M12, 0});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.expected_order, a.id) < std::tie(b.expected_order, b.id);
  });
  return out;
}

SpectrumRecord compute_spectrum_record(const Group& g) {
  const auto orders = element_orders(g);
  SpectrumRecord r;
  r.id = g.id();
  r.order = g.order();
  r.spectrum = spectrum_from_orders(orders);
  for (const auto& c : involution_class_decomposition(g, orders).classes)
    r.involution_classes.emplace_back(c.class_size, c.centralizer_order);
  return r;
}

SpectrumRecord compute_spectrum_record(const FamilyId& id, std::uint64_t cap) {
  return compute_spectrum_record(build_group(id, cap));
}

std::string spectrum_record_to_json(const SpectrumRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["order"] = r.order;
  auto spectrum = nlohmann::ordered_json::array();
  for (const auto& [k, n] : r.spectrum.entries) spectrum.push_back({k, n});
  j["spectrum"] = spectrum;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& [size, cent] : r.involution_classes) classes.push_back({size, cent});
  j["involutionClasses"] = classes;
  j["formatVersion"] = kSpectrumFormatVersion;
  return j.dump(2) + "\n";
}

std::optional<SpectrumRecord> spectrum_record_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("formatVersion").get<int>() != kSpectrumFormatVersion) return std::nullopt;
    SpectrumRecord r;
    r.id = j.at("id").get<std::string>();
    r.order = j.at("order").get<std::uint64_t>();
    r.spectrum.group_order = r.order;
    for (const auto& row : j.at("spectrum")) {
      const auto k = row.at(0).get<std::uint64_t>();
      const auto n = row.at(1).get<std::uint64_t>();
      if (n == 0 || !r.spectrum.entries.emplace(k, n).second) return std::nullopt;
    }
    for (const auto& row : j.at("involutionClasses"))
      r.involution_classes.emplace_back(row.at(0).get<std::uint64_t>(), row.at(1).get<std::uint64_t>());
    return r;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

bool spectrum_record_is_consistent(const SpectrumRecord& r, const FamilyId& family) {
  if (r.id != format_group_id(family) || r.order != group_order_formula(family)) return false;
  if (r.spectrum.group_order != r.order || r.spectrum.count(1) != 1) return false;
  std::uint64_t total = 0;
  for (const auto& [k, n] : r.spectrum.entries) {
    if (k == 0 || r.order % k != 0) return false;
    total += n;
  }
  if (total != r.order) return false;
  std::uint64_t involutions = 0;
  for (std::size_t i = 0; i < r.involution_classes.size(); ++i) {
    const auto [size, cent] = r.involution_classes[i];
    if (size * cent != r.order) return false;
    if (i > 0 && r.involution_classes[i - 1].first > size) return false;
    involutions += size;
  }
  return involutions == r.spectrum.count(2);
}

std::filesystem::path SpectrumCache::path_for(const std::string& id) const {
  return dir_ / (id + ".spectrum.json");
}

std::optional<SpectrumRecord> SpectrumCache::load(const FamilyId& family) const {
  std::ifstream in(path_for(format_group_id(family)), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto record = spectrum_record_from_json(buffer.str());
  if (!record || !spectrum_record_is_consistent(*record, family)) return std::nullopt;
  return record;
}

void SpectrumCache::store(const SpectrumRecord& record) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(record.id);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id());
  auto temp = target;
  temp += suffix.str();
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << spectrum_record_to_json(record);
    if (!out) throw Error(ErrorKind::VerificationFailed, "cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

SpectrumRecord obtain_record(const FamilyId& family, const CensusOptions& options) {
  if (options.cache_dir) {
    const SpectrumCache cache(*options.cache_dir);
    if (auto cached = cache.load(family)) return *cached;
    auto record = compute_spectrum_record(family, options.cap);
    cache.store(record);
    return record;
  }
  return compute_spectrum_record(family, options.cap);
}

std::vector<SpectrumRecord> obtain_records(std::span<const CatalogEntry> entries, const CensusOptions& options) {
  std::vector<SpectrumRecord> records(entries.size());
  std::vector<std::exception_ptr> failures(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        records[i] = obtain_record(entries[i].family, options);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(entries.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (records[i].order != entries[i].expected_order)
      throw Error(ErrorKind::VerificationFailed, entries[i].id + " enumerated to order " +
                                                     std::to_string(records[i].order) + ", expected " +
                                                     std::to_string(entries[i].expected_order));
  return records;
}

}  // namespace invcensus
