#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bgaps/admissible/tuple.hpp"

namespace bgaps::admissible {

// True iff the offsets miss at least one residue class modulo p (full enumeration).
bool admissible_mod_naive(std::span<const std::int64_t> offsets, std::uint64_t p);

// Oracle: full residue enumeration modulo every prime p <= k.
bool is_admissible_naive(const Tuple& t);

// Two-phase test: a short residue window scanned through a bitmap of the tuple,
// falling back to full enumeration when the window is fully occupied.
bool is_admissible(const Tuple& t);
bool is_admissible(std::span<const std::int64_t> offsets);

// Smallest prime p <= k modulo which every residue class is occupied, if any.
std::optional<std::uint64_t> first_obstruction(const Tuple& t);

// Bitmap-backed tester over a fixed set of sorted offsets.
class AdmissibilityTester {
 public:
  explicit AdmissibilityTester(std::span<const std::int64_t> sorted_offsets);

  bool admissible_mod(std::uint64_t p) const;
  bool admissible() const;
  std::optional<std::uint64_t> obstruction() const;

  // Window length used for prime p in a k-tuple; 0 means "enumerate fully".
  // m = min(p-1, ceil(3 ln k)) once p > k / ln k.
  static std::uint64_t window_length(std::uint64_t p, std::size_t k);

 private:
  bool window_has_gap(std::uint64_t p, std::uint64_t m) const;
  bool bit(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }

  std::span<const std::int64_t> offsets_;
  std::vector<std::uint64_t> bits_;  // empty when the diameter is too large for a bitmap
  std::uint64_t span_ = 0;          // diameter + 1
};

}  // namespace bgaps::admissible
