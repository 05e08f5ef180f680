#include "invcensus/family.hpp"

#include <charconv>

#include "invcensus/error.hpp"
#include "invcensus/linear_groups.hpp"
#include "invcensus/number_theory.hpp"
#include "invcensus/permutation.hpp"

namespace invcensus {

const char* to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::CYCLIC2: return "CYCLIC2";
    case FamilyTag::ALT: return "ALT";
    case FamilyTag::PSL2: return "PSL2";
    case FamilyTag::PSL3: return "PSL3";
    case FamilyTag::PSU3: return "PSU3";
    case FamilyTag::PSP4: return "PSP4";
    case FamilyTag::M11: return "M11";
    case FamilyTag::M12: return "M12";
  }
  return "?";
}

namespace {

struct Prefix {
  std::string_view text;
  FamilyTag tag;
};

constexpr Prefix kPrefixes[] = {
    {"alt:", FamilyTag::ALT},   {"psl2:", FamilyTag::PSL2}, {"psl3:", FamilyTag::PSL3},
    {"psu3:", FamilyTag::PSU3}, {"psp4:", FamilyTag::PSP4},
};

[[noreturn]] void bad_id(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "invalid group id '" + std::string(text) + "': " + why);
}

}  // namespace

FamilyId parse_group_id(std::string_view text) {
  if (text == "cyclic:2") return {FamilyTag::CYCLIC2, 0};
  if (text == "m11") return {FamilyTag::M11, 0};
  if (text == "m12") return {FamilyTag::M12, 0};
  for (const auto& prefix : kPrefixes) {
    if (!text.starts_with(prefix.text)) continue;
    const auto digits = text.substr(prefix.text.size());
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || digits[0] == '0')
      bad_id(text, "parameter must be a positive integer without leading zeros");
    if (prefix.tag == FamilyTag::ALT) {
      if (value < 3 || value > 10) bad_id(text, "alt:n needs 3 <= n <= 10");
      return {prefix.tag, value};
    }
    const auto pp = as_prime_power(value);
    if (!pp) bad_id(text, std::to_string(value) + " is not a prime power");
    if (prefix.tag == FamilyTag::PSP4 && pp->p == 2) bad_id(text, "psp4:q needs q odd");
    return {prefix.tag, value};
  }
  bad_id(text, "expected alt:<n>, psl2:<q>, psl3:<q>, psu3:<q>, psp4:<q>, m11, m12 or cyclic:2");
}

std::string format_group_id(const FamilyId& id) {
  const auto param = std::to_string(id.parameter);
  switch (id.tag) {
    case FamilyTag::CYCLIC2: return "cyclic:2";
    case FamilyTag::ALT: return "alt:" + param;
    case FamilyTag::PSL2: return "psl2:" + param;
    case FamilyTag::PSL3: return "psl3:" + param;
    case FamilyTag::PSU3: return "psu3:" + param;
    case FamilyTag::PSP4: return "psp4:" + param;
    case FamilyTag::M11: return "m11";
    case FamilyTag::M12: return "m12";
  }
  return "?";
}

namespace {

Group build_permutation_group(const std::string& id, const std::vector<Permutation>& gens, std::uint64_t cap) {
  auto ops = std::make_shared<PermutationOps>(gens.front().degree());
  std::vector<ElementKey> keys;
  for (const auto& p : gens) keys.push_back(ops->encode(p));
  return enumerate_closure(id, std::move(ops), std::move(keys), cap);
}

Group build_projective_group(const std::string& id, LinearFamily family, std::uint64_t q, std::uint64_t cap) {
  const auto data = linear_group_data(family, q);
  auto ops = std::make_shared<MatrixProjectiveOps>(data.field, data.dim, data.center);
  std::vector<ElementKey> keys;
  for (const auto& m : data.generators) keys.push_back(ops->encode(m));
  return enumerate_closure(id, std::move(ops), std::move(keys), cap);
}

}  // namespace

Group build_group(const FamilyId& id, std::uint64_t cap) {
  const auto name = format_group_id(id);
  switch (id.tag) {
    case FamilyTag::CYCLIC2:
    case FamilyTag::ALT:
    case FamilyTag::M11:
    case FamilyTag::M12: return build_permutation_group(name, standard_generators(name), cap);
    case FamilyTag::PSL2: return build_projective_group(name, LinearFamily::SL2, id.parameter, cap);
    case FamilyTag::PSL3: return build_projective_group(name, LinearFamily::SL3, id.parameter, cap);
    case FamilyTag::PSU3: return build_projective_group(name, LinearFamily::SU3, id.parameter, cap);
    case FamilyTag::PSP4: return build_projective_group(name, LinearFamily::SP4, id.parameter, cap);
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown family");
}

}  // namespace invcensus
