#include "invcensus/group.hpp"

#include <algorithm>
#include <numeric>

#include "invcensus/error.hpp"
#include "invcensus/number_theory.hpp"

namespace invcensus {

std::optional<std::uint32_t> Group::index_of(ElementKey key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Group::index(ElementKey key) const {
  const auto it = index_.find(key);
  if (it == index_.end())
    throw Error(ErrorKind::VerificationFailed, "element " + ops_->describe(key) + " is not in " + id_);
  return it->second;
}

Group enumerate_closure(std::string id, std::shared_ptr<const ElementOps> ops, std::vector<ElementKey> generators,
                        std::uint64_t cap) {
  if (generators.empty()) throw Error(ErrorKind::ConditionViolated, "closure needs at least one generator");
  if (cap < 1) throw Error(ErrorKind::ConditionViolated, "cap must be positive");

  std::vector<ElementKey> steps;
  for (ElementKey s : generators) {
    steps.push_back(s);
    steps.push_back(ops->inverse(s));
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  Group g;
  g.id_ = std::move(id);
  g.ops_ = std::move(ops);
  g.generators_ = std::move(generators);

  auto& keys = g.elements_;
  auto& index = g.index_;
  auto insert = [&](ElementKey key) {
    if (index.try_emplace(key, static_cast<std::uint32_t>(keys.size())).second) {
      keys.push_back(key);
      if (keys.size() > cap) throw CapExceeded(cap, g.id_);
    }
  };
  insert(g.ops_->identity());
  for (ElementKey s : g.generators_) insert(s);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const ElementKey x = keys[i];
    for (ElementKey s : steps) insert(g.ops_->multiply(x, s));
  }

  // Re-index in ascending key order.
  std::vector<std::uint32_t> by_key(keys.size());
  std::iota(by_key.begin(), by_key.end(), 0u);
  std::sort(by_key.begin(), by_key.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> rank(keys.size());
  for (std::uint32_t r = 0; r < by_key.size(); ++r) rank[by_key[r]] = r;
  for (auto& [key, idx] : index) idx = rank[idx];
  std::sort(keys.begin(), keys.end());
  keys.shrink_to_fit();
  return g;
}

std::uint64_t element_order(const Group& g, ElementKey x) {
  const ElementKey e = g.identity();
  std::uint64_t m = 1;
  for (ElementKey power = x; power != e; power = g.multiply(power, x)) {
    ++m;
    if (m > g.order()) throw Error(ErrorKind::VerificationFailed, "element order exceeds group order");
  }
  return m;
}

std::vector<std::uint32_t> element_orders(const Group& g) {
  const ElementKey e = g.identity();
  std::vector<std::uint32_t> orders(g.order(), 0);
  std::vector<std::uint32_t> chain;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (orders[i] != 0) continue;
    const ElementKey x = g.element(i);
    chain.clear();
    chain.push_back(i);
    for (ElementKey power = x; power != e;) {
      power = g.multiply(power, x);
      chain.push_back(g.index(power));
    }
    const auto m = static_cast<std::uint32_t>(chain.size());
    for (std::uint32_t k = 1; k <= m; ++k) {
      auto& slot = orders[chain[k - 1]];
      if (slot == 0) slot = m / std::gcd(k, m);
    }
  }
  return orders;
}

std::uint64_t OrderSpectrum::count(std::uint64_t k) const {
  const auto it = entries.find(k);
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::uint64_t> OrderSpectrum::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [k, n] : entries)
    if (n > 0 && is_prime(k)) out.push_back(k);
  return out;
}

OrderSpectrum spectrum_from_orders(std::span<const std::uint32_t> orders) {
  OrderSpectrum s;
  s.group_order = orders.size();
  for (auto k : orders) ++s.entries[k];
  return s;
}

OrderSpectrum order_spectrum(const Group& g) { return spectrum_from_orders(element_orders(g)); }

std::uint64_t involution_count(const Group& g) { return order_spectrum(g).count(2); }

namespace {

struct Conjugator {
  ElementKey s;
  ElementKey s_inv;
};

std::vector<Conjugator> conjugators(const Group& g) {
  std::vector<Conjugator> out;
  for (ElementKey s : g.generators()) out.push_back({s, g.inverse(s)});
  return out;
}

// Orbit of element index `start` under x -> s^-1 x s. Marks members in
// `label` with `tag` and returns the orbit size.
std::uint64_t conjugation_orbit(const Group& g, const std::vector<Conjugator>& conj, std::uint32_t start,
                                std::vector<std::uint32_t>& label, std::uint32_t tag,
                                std::vector<std::uint32_t>& queue) {
  queue.clear();
  queue.push_back(start);
  label[start] = tag;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementKey x = g.element(queue[head]);
    for (const auto& c : conj) {
      const std::uint32_t y = g.index(g.multiply(g.multiply(c.s_inv, x), c.s));
      if (label[y] != tag) {
        label[y] = tag;
        queue.push_back(y);
      }
    }
  }
  return queue.size();
}

constexpr std::uint32_t kUnlabelled = ~std::uint32_t{0};

}  // namespace

ClassPartition class_partition(const Group& g) {
  const auto conj = conjugators(g);
  std::vector<std::uint32_t> label(g.order(), kUnlabelled);
  std::vector<std::uint32_t> queue;
  std::vector<ConjugacyClass> found;
  // Scanning in key order makes the first unlabelled element the minimum of
  // its class.
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (label[i] != kUnlabelled) continue;
    const auto tag = static_cast<std::uint32_t>(found.size());
    const std::uint64_t size = conjugation_orbit(g, conj, i, label, tag, queue);
    found.push_back({g.element(i), size, g.order() / size});
  }

  std::vector<std::uint32_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) {
    return std::tie(found[a].size, found[a].representative) < std::tie(found[b].size, found[b].representative);
  });
  std::vector<std::uint32_t> position(found.size());
  ClassPartition out;
  for (std::uint32_t r = 0; r < perm.size(); ++r) {
    position[perm[r]] = r;
    out.classes.push_back(found[perm[r]]);
  }
  for (auto& l : label) l = position[l];
  out.class_of = std::move(label);
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) { return class_partition(g).classes; }

std::uint64_t centralizer_order(const Group& g, ElementKey x) {
  const auto conj = conjugators(g);
  std::vector<std::uint32_t> label(g.order(), kUnlabelled);
  std::vector<std::uint32_t> queue;
  return g.order() / conjugation_orbit(g, conj, g.index(x), label, 0, queue);
}

std::uint64_t direct_centralizer_order(const Group& g, ElementKey x) {
  std::uint64_t count = 0;
  for (ElementKey y : g.elements())
    if (g.multiply(x, y) == g.multiply(y, x)) ++count;
  return count;
}

std::uint64_t InvolutionClassReport::total_involutions() const {
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.class_size;
  return total;
}

std::uint64_t InvolutionClassReport::centralizer_index_sum() const {
  std::uint64_t total = 0;
  for (const auto& c : classes) {
    if (c.centralizer_order == 0 || group_order % c.centralizer_order != 0)
      throw Error(ErrorKind::VerificationFailed, "centralizer order does not divide the group order");
    total += group_order / c.centralizer_order;
  }
  return total;
}

InvolutionClassReport involution_class_decomposition(const Group& g, std::span<const std::uint32_t> orders) {
  const auto conj = conjugators(g);
  std::vector<std::uint32_t> label(g.order(), kUnlabelled);
  std::vector<std::uint32_t> queue;
  InvolutionClassReport report;
  report.group_order = g.order();
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    if (orders[i] != 2 || label[i] != kUnlabelled) continue;
    const std::uint64_t size = conjugation_orbit(g, conj, i, label, 0, queue);
    report.classes.push_back({g.element(i), size, g.order() / size});
  }
  std::sort(report.classes.begin(), report.classes.end(), [](const auto& a, const auto& b) {
    return std::tie(a.class_size, a.representative) < std::tie(b.class_size, b.representative);
  });
  return report;
}

InvolutionClassReport involution_class_decomposition(const Group& g) {
  return involution_class_decomposition(g, element_orders(g));
}

}  // namespace invcensus
