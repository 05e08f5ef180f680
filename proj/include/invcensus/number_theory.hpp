#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace invcensus {

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned n;
};

/// Decomposes q = p^n; nullopt when q is not a prime power (or q < 2).
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// Exact integer square root if n is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

}  // namespace invcensus
