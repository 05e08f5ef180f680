#include "invcensus/herzog.hpp"

#include <cmath>
#include <numeric>

#include "invcensus/error.hpp"
#include "invcensus/number_theory.hpp"

namespace invcensus {

namespace {

[[noreturn]] void violated(const FamilyId& f, const std::string& why) {
  throw Error(ErrorKind::ConditionViolated, format_group_id(f) + ": " + why);
}

std::uint64_t odd_prime_power_or_throw(const FamilyId& f) {
  const auto pp = as_prime_power(f.parameter);
  if (!pp) violated(f, "q is not a prime power");
  if (pp->p == 2) violated(f, "q must be a power of an odd prime");
  return f.parameter;
}

std::string mod_text(std::uint64_t q, std::uint64_t m) {
  const auto r = q % m;
  const auto residue = r == m - 1 ? std::string("-1") : std::to_string(r);
  return "q=" + std::to_string(q) + " = " + residue + " (mod " + std::to_string(m) + ")";
}

}  // namespace

TheoremRow predicted_involutions(const FamilyId& f) {
  switch (f.tag) {
    case FamilyTag::CYCLIC2: return {f, 1, 0, "G cyclic of order 2"};
    case FamilyTag::M11: return {f, 165, 0, "G = M11"};
    case FamilyTag::ALT:
      if (f.parameter != 7) violated(f, "the only alternating group in the theorem is A7");
      return {f, 105, 0, "G = A7"};
    case FamilyTag::PSL2: {
      const auto q = odd_prime_power_or_throw(f);
      if (q <= 3) violated(f, "needs q > 3");
      const auto r = q % 8;
      if (r != 1 && r != 7) violated(f, mod_text(q, 8) + "; the theorem needs q = +-1 (mod 8)");
      const int eps = r == 1 ? 1 : -1;
      const std::uint64_t i = eps == 1 ? q * (q + 1) / 2 : q * (q - 1) / 2;
      return {f, i, eps, mod_text(q, 8) + "; epsilon=" + (eps == 1 ? "+1" : "-1")};
    }
    case FamilyTag::PSL3: {
      const auto q = odd_prime_power_or_throw(f);
      if (q % 4 != 3) violated(f, mod_text(q, 4) + "; the theorem needs q = -1 (mod 4)");
      return {f, q * q * (q * q + q + 1), 0, mod_text(q, 4)};
    }
    case FamilyTag::PSU3: {
      const auto q = odd_prime_power_or_throw(f);
      if (q % 4 != 1) violated(f, mod_text(q, 4) + "; the theorem needs q = 1 (mod 4)");
      return {f, q * q * (q * q - q + 1), 0, mod_text(q, 4)};
    }
    case FamilyTag::PSP4:
    case FamilyTag::M12: break;
  }
  violated(f, "not one of the families in the involution theorem");
}

std::uint64_t group_order_formula(const FamilyId& f) {
  const std::uint64_t q = f.parameter;
  switch (f.tag) {
    case FamilyTag::CYCLIC2: return 2;
    case FamilyTag::M11: return 7920;
    case FamilyTag::M12: return 95040;
    case FamilyTag::ALT: {
      if (f.parameter < 3) violated(f, "alt:n needs n >= 3");
      std::uint64_t fact = 1;
      for (std::uint64_t k = 2; k <= f.parameter; ++k) fact *= k;
      return fact / 2;
    }
    case FamilyTag::PSL2:
      if (!as_prime_power(q)) violated(f, "q is not a prime power");
      return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
    case FamilyTag::PSL3:
      if (!as_prime_power(q)) violated(f, "q is not a prime power");
      return q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd<std::uint64_t>(3, q - 1);
    case FamilyTag::PSU3:
      if (!as_prime_power(q)) violated(f, "q is not a prime power");
      return q * q * q * (q * q * q + 1) * (q * q - 1) / std::gcd<std::uint64_t>(3, q + 1);
    case FamilyTag::PSP4: {
      odd_prime_power_or_throw(f);
      const std::uint64_t q2 = q * q;
      return q2 * q2 * (q2 + 1) * (q2 - 1) * (q2 - 1) / 2;
    }
  }
  violated(f, "unknown family");
}

std::vector<TheoremRow> classify_by_involutions(std::uint64_t involutions) {
  const std::uint64_t i = involutions;
  if (i < 1 || i % 4 != 1)
    throw Error(ErrorKind::HypothesisViolated,
                "I=" + std::to_string(i) + " but the theorem assumes I = 1 (mod 4)");

  std::vector<TheoremRow> rows;
  if (i == 1) rows.push_back(predicted_involutions({FamilyTag::CYCLIC2, 0}));
  if (i == 105) rows.push_back(predicted_involutions({FamilyTag::ALT, 7}));
  if (i == 165) rows.push_back(predicted_involutions({FamilyTag::M11, 0}));

  // q^2 + eps q - 2I = 0  =>  q = (-eps + sqrt(1 + 8I)) / 2
  if (const auto s = exact_sqrt(1 + 8 * i)) {
    for (int eps : {1, -1}) {
      const std::uint64_t twice_q = eps == 1 ? *s - 1 : *s + 1;
      if (twice_q % 2 != 0) continue;
      const std::uint64_t q = twice_q / 2;
      const auto pp = as_prime_power(q);
      if (!pp || pp->p == 2 || q <= 3) continue;
      if (q % 8 != (eps == 1 ? 1u : 7u)) continue;
      rows.push_back(predicted_involutions({FamilyTag::PSL2, q}));
    }
  }

  const auto bound = static_cast<std::uint64_t>(std::pow(static_cast<long double>(i), 0.25L)) + 1;
  for (FamilyTag tag : {FamilyTag::PSL3, FamilyTag::PSU3}) {
    for (std::uint64_t q = 3; q <= bound; q += 2) {
      const auto pp = as_prime_power(q);
      if (!pp) continue;
      const bool plus = tag == FamilyTag::PSL3;
      if (q % 4 != (plus ? 3u : 1u)) continue;
      const std::uint64_t value = plus ? q * q * (q * q + q + 1) : q * q * (q * q - q + 1);
      if (value == i) rows.push_back(predicted_involutions({tag, q}));
    }
  }
  return rows;
}

CounterexampleVerification verify_counterexample(std::uint64_t cap) {
  const FamilyId psp{FamilyTag::PSP4, 3};
  const FamilyId psl{FamilyTag::PSL3, 4};
  const Group a = build_group(psp, cap);
  const Group b = build_group(psl, cap);
  const auto orders_a = element_orders(a);
  const auto orders_b = element_orders(b);

  CounterexampleVerification out;
  out.classes_a = involution_class_decomposition(a, orders_a);
  out.classes_b = involution_class_decomposition(b, orders_b);

  auto& r = out.report;
  r.group_a = a.id();
  r.group_b = b.id();
  r.i2_a = spectrum_from_orders(orders_a).count(2);
  r.i2_b = spectrum_from_orders(orders_b).count(2);
  r.order_a = a.order();
  r.order_b = b.order();
  r.is_counterexample = r.i2_a == r.i2_b && r.order_a != r.order_b;

  const auto& ca = out.classes_a.classes;
  const bool a_ok = ca.size() == 2 && ca[0].centralizer_order == 576 && ca[1].centralizer_order == 96;
  if (!a_ok) throw Error(ErrorKind::VerificationFailed, "PSp(4,3) involution classes are not {576, 96}");
  const auto& cb = out.classes_b.classes;
  if (cb.size() != 1 || cb[0].centralizer_order != p_part(r.order_b, 2))
    throw Error(ErrorKind::VerificationFailed, "PSL(3,4) does not have a single involution class with 2-group centralizer");
  if (out.classes_a.total_involutions() != r.i2_a || out.classes_a.centralizer_index_sum() != r.i2_a ||
      out.classes_b.total_involutions() != r.i2_b || out.classes_b.centralizer_index_sum() != r.i2_b)
    throw Error(ErrorKind::VerificationFailed, "class decomposition does not sum to the involution count");
  return out;
}

}  // namespace invcensus
