#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "invcensus/group.hpp"

namespace invcensus {

enum class FamilyTag { CYCLIC2, ALT, PSL2, PSL3, PSU3, PSP4, M11, M12 };

const char* to_string(FamilyTag tag);

/// A named simple-group family with its parameter: n for ALT, q for the
/// q-families, 0 otherwise.
struct FamilyId {
  FamilyTag tag = FamilyTag::CYCLIC2;
  std::uint64_t parameter = 0;

  auto operator<=>(const FamilyId&) const = default;
};

/// Group ids: `alt:<n>` | `psl2:<q>` | `psl3:<q>` | `psu3:<q>` | `psp4:<q>` |
/// `m11` | `m12` | `cyclic:2`. Throws ParseError on anything else.
FamilyId parse_group_id(std::string_view text);
std::string format_group_id(const FamilyId& id);

/// Constructs and enumerates the group named by `id`.
Group build_group(const FamilyId& id, std::uint64_t cap = kDefaultCap);

}  // namespace invcensus
