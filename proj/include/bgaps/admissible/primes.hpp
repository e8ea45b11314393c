#pragma once

#include <cstdint>
#include <vector>

namespace bgaps::admissible {

// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// The first `count` primes p_1 = 2, p_2 = 3, ...
std::vector<std::uint64_t> first_primes(std::size_t count);

// pi(x), the number of primes <= x.
std::size_t prime_pi(std::uint64_t x);

// Non-negative residue of n modulo p.
inline std::uint64_t residue(std::int64_t n, std::uint64_t p) {
  auto pm = static_cast<std::int64_t>(p);
  std::int64_t r = n % pm;
  return static_cast<std::uint64_t>(r < 0 ? r + pm : r);
}

}  // namespace bgaps::admissible
