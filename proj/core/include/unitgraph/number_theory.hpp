#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace unitgraph::nt {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// (p, k) with n = p^k, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t n);

/// Product of the distinct primes dividing n.
std::uint64_t radical(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// a^e, nullopt on overflow past 2^63.
std::optional<std::uint64_t> checked_pow(std::uint64_t a, std::uint64_t e);

}  // namespace unitgraph::nt
