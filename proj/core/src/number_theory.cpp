#include "unitgraph/number_theory.hpp"

#include <numeric>

namespace unitgraph::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t n) {
  const auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  std::uint32_t k = 0;
  while (n > 1) {
    n /= primes[0];
    ++k;
  }
  return std::make_pair(primes[0], k);
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto p : prime_divisors(n)) r *= p;
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::optional<std::uint64_t> checked_pow(std::uint64_t a, std::uint64_t e) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (a != 0 && r > limit / a) return std::nullopt;
    r *= a;
  }
  return r;
}

}  // namespace unitgraph::nt
