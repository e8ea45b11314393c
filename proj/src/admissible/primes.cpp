#include "bgaps/admissible/primes.hpp"

#include <cmath>

namespace bgaps::admissible {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  // Odd-only sieve: index i <-> 2i+1.
  std::vector<bool> composite(limit / 2 + 1, false);
  primes.push_back(2);
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i]) continue;
    std::uint64_t p = 2 * i + 1;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += 2 * p) composite[q / 2] = true;
  }
  return primes;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  // p_n < n (ln n + ln ln n) for n >= 6.
  double n = static_cast<double>(count < 6 ? 6 : count);
  auto limit = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  auto primes = primes_up_to(limit);
  while (primes.size() < count) {
    limit = limit + limit / 4;
    primes = primes_up_to(limit);
  }
  primes.resize(count);
  return primes;
}

std::size_t prime_pi(std::uint64_t x) { return primes_up_to(x).size(); }

}  // namespace bgaps::admissible
