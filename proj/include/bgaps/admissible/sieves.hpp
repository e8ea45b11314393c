#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bgaps/admissible/tuple.hpp"

namespace bgaps::admissible {

enum class SieveMethod {
  eratosthenes,
  k_primes_past_k,
  hensley_richards,
  shifted_schinzel,
  shifted_greedy,
};

std::string_view to_string(SieveMethod m);
// Accepts the hyphenated names ("k-primes-past-k", "shifted-greedy", ...).
SieveMethod parse_sieve_method(std::string_view name);

struct ShiftRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t stride = 1;
};

struct SieveConfig {
  SieveMethod method = SieveMethod::shifted_greedy;
  std::optional<std::int64_t> shift;   // empty: search over shifts
  std::optional<ShiftRange> search;    // empty: [-x/2, x/2], stride max(1, x/1000)
  bool refine = true;                  // unit-stride pass around the best coarse shift
  std::size_t batch = 1;               // greedy primes per batch
  unsigned threads = 1;
  double greedy_multiplier = 2.0;      // Schinzel classes for p <= mult * sqrt(k log k)

  // Throws std::invalid_argument when batch is not a multiple of threads, etc.
  void validate() const;
};

// Residue-class description of a sieved interval [s, s + d]: odd numbers are
// removed, then 0 mod p_n for 1 < n <= m, then r mod p_n for each listed class.
struct SieveRecord {
  std::uint64_t k = 0;
  std::int64_t s = 0;
  std::int64_t d = 0;
  std::uint64_t m = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;  // (prime index, residue)

  bool operator==(const SieveRecord&) const = default;
};

struct SieveResult {
  Tuple tuple;
  std::int64_t shift = 0;
  std::uint64_t m = 0;
  std::optional<SieveRecord> record;
};

Tuple sieve_k_primes_past_k(std::size_t k);
Tuple sieve_eratosthenes(std::size_t k);
Tuple sieve_hensley_richards(std::size_t k);
SieveResult sieve_shifted_schinzel(std::size_t k, const SieveConfig& cfg);
SieveResult sieve_shifted_greedy(std::size_t k, const SieveConfig& cfg);

// Dispatches on cfg.method.
SieveResult run_sieve(std::size_t k, const SieveConfig& cfg);

// Survivors of the record's sieve; throws if the count differs from k.
Tuple realize(const SieveRecord& rec);

// Index i minimizing v[i + k - 1] - v[i] over sorted v with v.size() >= k.
std::size_t narrowest_window(const std::vector<std::int64_t>& sorted, std::size_t k);

}  // namespace bgaps::admissible
