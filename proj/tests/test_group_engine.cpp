#include <doctest.h>

#include <memory>
#include <numeric>

#include "invcensus/error.hpp"
#include "invcensus/family.hpp"
#include "invcensus/group.hpp"
#include "invcensus/linear_groups.hpp"
#include "invcensus/permutation.hpp"
#include "oracles.hpp"

using namespace invcensus;

namespace {

Group perm_group(unsigned degree, const std::vector<std::string>& cycles, std::uint64_t cap = kDefaultCap) {
  auto ops = std::make_shared<PermutationOps>(degree);
  std::vector<ElementKey> keys;
  for (const auto& c : cycles) keys.push_back(ops->encode(Permutation::from_cycles(degree, c)));
  return enumerate_closure("test", ops, keys, cap);
}

Group named(const char* id) { return build_group(parse_group_id(id)); }

void check_invariants(const Group& g) {
  const auto orders = element_orders(g);
  const auto spectrum = spectrum_from_orders(orders);
  std::uint64_t total = 0;
  for (auto [k, n] : spectrum.entries) {
    CHECK(g.order() % k == 0);
    total += n;
  }
  CHECK(total == g.order());
  CHECK(spectrum.count(1) == 1);

  const auto partition = class_partition(g);
  std::uint64_t class_total = 0;
  for (const auto& c : partition.classes) {
    CHECK(c.size * c.centralizer_order == g.order());
    class_total += c.size;
  }
  CHECK(class_total == g.order());

  const auto report = involution_class_decomposition(g, orders);
  CHECK(report.total_involutions() == spectrum.count(2));
  CHECK(report.centralizer_index_sum() == spectrum.count(2));
}

}  // namespace

TEST_CASE("closure of a 3-cycle") {
  const Group g = perm_group(3, {"(0 1 2)"});
  CHECK(g.order() == 3);
  CHECK(g.contains(g.identity()));
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  for (std::uint32_t i = 0; i < g.order(); ++i) CHECK(g.index(g.element(i)) == i);
  CHECK_FALSE(g.index_of(0xFFFF).has_value());
  CHECK_THROWS_AS(g.index(0xFFFF), Error);
}

TEST_CASE("closure respects the cap") {
  try {
    perm_group(5, {"(0 1 2)", "(0 1 3)", "(0 1 4)"}, 59);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK(perm_group(5, {"(0 1 2)", "(0 1 3)", "(0 1 4)"}, 60).order() == 60);
}

TEST_CASE("element_order examples") {
  const Group s4 = perm_group(4, {"(0 1)", "(0 1 2 3)"});
  CHECK(s4.order() == 24);
  const PermutationOps ops(4);
  CHECK(element_order(s4, ops.encode(Permutation::from_cycles(4, "(0 1)(2 3)"))) == 2);
  CHECK(element_order(s4, ops.encode(Permutation::from_cycles(4, "(0 1 2 3)"))) == 4);
  CHECK(element_order(s4, s4.identity()) == 1);

  const Group psp = named("psp4:3");
  const auto data = linear_group_data(LinearFamily::SP4, 3);
  const MatrixProjectiveOps mops(data.field, 4, data.center);
  CHECK(element_order(psp, mops.encode(Matrix::scalar(data.field, 4, data.field->neg(data.field->one())))) == 1);
}

TEST_CASE("power-chain orders agree with direct orders") {
  for (const char* id : {"alt:6", "psl2:8", "psu3:3"}) {
    const Group g = named(id);
    const auto orders = element_orders(g);
    for (std::uint32_t i = 0; i < g.order(); i += 7) CHECK(orders[i] == element_order(g, g.element(i)));
  }
}

TEST_CASE("A5 spectrum and classes match the brute-force oracle") {
  const Group g = named("alt:5");
  const auto elements = oracle::alternating_group(5);
  REQUIRE(g.order() == elements.size());
  const auto expected = oracle::spectrum(elements);
  const auto spectrum = order_spectrum(g);
  REQUIRE(spectrum.entries.size() == expected.size());
  for (auto [k, n] : expected) CHECK(spectrum.count(k) == static_cast<std::uint64_t>(n));
  CHECK(spectrum.primes() == std::vector<std::uint64_t>{2, 3, 5});

  std::multiset<int> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.insert(static_cast<int>(c.size));
  CHECK(sizes == oracle::class_sizes(elements));
}

TEST_CASE("A6 and A7 class sizes match the oracle") {
  for (int n : {6, 7}) {
    const Group g = named(("alt:" + std::to_string(n)).c_str());
    const auto elements = oracle::alternating_group(n);
    std::multiset<int> sizes;
    for (const auto& c : conjugacy_classes(g)) sizes.insert(static_cast<int>(c.size));
    CHECK(sizes == oracle::class_sizes(elements));
    const auto expected = oracle::spectrum(elements);
    const auto spectrum = order_spectrum(g);
    for (auto [k, c] : expected) CHECK(spectrum.count(k) == static_cast<std::uint64_t>(c));
  }
}

TEST_CASE("involution classes of PSp(4,3)") {
  const Group g = named("psp4:3");
  CHECK(g.order() == 25920);
  const auto report = involution_class_decomposition(g);
  REQUIRE(report.k2() == 2);
  CHECK(report.classes[0].class_size == 45);
  CHECK(report.classes[0].centralizer_order == 576);
  CHECK(report.classes[1].class_size == 270);
  CHECK(report.classes[1].centralizer_order == 96);
  CHECK(report.total_involutions() == 315);
  CHECK(report.centralizer_index_sum() == 25920 / 576 + 25920 / 96);
  for (const auto& c : report.classes) CHECK(direct_centralizer_order(g, c.representative) == c.centralizer_order);
}

TEST_CASE("involution classes of PSL(3,4)") {
  const Group g = named("psl3:4");
  CHECK(g.order() == 20160);
  const auto report = involution_class_decomposition(g);
  REQUIRE(report.k2() == 1);
  CHECK(report.classes[0].class_size == 315);
  CHECK(report.classes[0].centralizer_order == 64);
  CHECK(direct_centralizer_order(g, report.classes[0].representative) == 64);
}

TEST_CASE("groups of odd order have no involutions") {
  const Group g = perm_group(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  CHECK(g.order() == 21);
  const auto report = involution_class_decomposition(g);
  CHECK(report.k2() == 0);
  CHECK(report.total_involutions() == 0);
  CHECK(involution_count(g) == 0);
}

TEST_CASE("counting invariants hold across families") {
  for (const char* id : {"cyclic:2", "alt:5", "alt:6", "psl2:7", "psl2:8", "psl2:11", "psl3:3", "psu3:3", "m11"}) {
    CAPTURE(id);
    check_invariants(named(id));
  }
}

TEST_CASE("different generating sets give the same invariants") {
  const Group a = named("alt:5");
  const Group b = perm_group(5, {"(0 1 2 3 4)", "(2 3 4)"});
  REQUIRE(a.order() == b.order());
  CHECK(std::equal(a.elements().begin(), a.elements().end(), b.elements().begin()));
  CHECK(order_spectrum(a) == order_spectrum(b));
  const auto ca = conjugacy_classes(a);
  const auto cb = conjugacy_classes(b);
  REQUIRE(ca.size() == cb.size());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    CHECK(ca[i].representative == cb[i].representative);
    CHECK(ca[i].size == cb[i].size);
  }
}

TEST_CASE("orbit centralizers equal direct centralizers") {
  for (const char* id : {"alt:6", "psl2:7", "psu3:3"}) {
    const Group g = named(id);
    for (const auto& c : conjugacy_classes(g)) {
      CHECK(centralizer_order(g, c.representative) == c.centralizer_order);
      CHECK(direct_centralizer_order(g, c.representative) == c.centralizer_order);
    }
  }
}

TEST_CASE("closure is exhaustive: products of elements stay inside") {
  for (const char* id : {"m11", "psl3:3"}) {
    const Group g = named(id);
    for (std::uint32_t i = 0; i < g.order(); i += 131) {
      const auto x = g.element(i);
      CHECK(g.contains(g.inverse(x)));
      for (std::uint32_t j = 0; j < g.order(); j += 977) CHECK(g.contains(g.multiply(x, g.element(j))));
    }
  }
}

TEST_CASE("PSL(2,7) and PSL(3,3) spectra match the matrix oracle") {
  const auto c2 = oracle::projective_census<2>(7);
  const auto s2 = order_spectrum(named("psl2:7"));
  CHECK(s2.group_order == static_cast<std::uint64_t>(c2.order));
  for (auto [k, n] : c2.spectrum) CHECK(s2.count(k) == static_cast<std::uint64_t>(n));

  const auto c3 = oracle::projective_census<3>(3);
  const auto s3 = order_spectrum(named("psl3:3"));
  CHECK(s3.group_order == static_cast<std::uint64_t>(c3.order));
  for (auto [k, n] : c3.spectrum) CHECK(s3.count(k) == static_cast<std::uint64_t>(n));
}

TEST_CASE("enumeration is deterministic") {
  const Group a = named("psu3:3");
  const Group b = named("psu3:3");
  CHECK(std::equal(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end()));
  CHECK(element_orders(a) == element_orders(b));
  const auto pa = class_partition(a);
  const auto pb = class_partition(b);
  CHECK(pa.class_of == pb.class_of);
}
