#include "bgaps/admissible/admissibility.hpp"

#include <cmath>
#include <stdexcept>

#include "bgaps/admissible/primes.hpp"

namespace bgaps::admissible {

namespace {

constexpr std::uint64_t kMaxBitmapSpan = std::uint64_t{1} << 34;

}  // namespace

bool admissible_mod_naive(std::span<const std::int64_t> offsets, std::uint64_t p) {
  if (offsets.size() < p) return true;
  std::vector<char> seen(p, 0);
  std::uint64_t distinct = 0;
  for (std::int64_t h : offsets) {
    auto r = residue(h, p);
    if (!seen[r]) {
      seen[r] = 1;
      if (++distinct == p) return false;
    }
  }
  return true;
}

bool is_admissible_naive(const Tuple& t) {
  for (auto p : primes_up_to(t.size())) {
    if (!admissible_mod_naive(t.offsets(), p)) return false;
  }
  return true;
}

AdmissibilityTester::AdmissibilityTester(std::span<const std::int64_t> sorted_offsets)
    : offsets_(sorted_offsets) {
  if (offsets_.empty()) throw std::invalid_argument("admissibility of an empty tuple (k = 0)");
  auto diameter = static_cast<std::uint64_t>(offsets_.back() - offsets_.front());
  span_ = diameter + 1;
  if (span_ <= kMaxBitmapSpan) {
    bits_.assign((span_ + 63) / 64, 0);
    for (std::int64_t h : offsets_) {
      auto i = static_cast<std::uint64_t>(h - offsets_.front());
      bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
}

std::uint64_t AdmissibilityTester::window_length(std::uint64_t p, std::size_t k) {
  if (k < 3) return 0;
  double lk = std::log(static_cast<double>(k));
  if (static_cast<double>(p) <= static_cast<double>(k) / lk) return 0;
  auto m = static_cast<std::uint64_t>(std::ceil(3.0 * lk));
  return std::min<std::uint64_t>(p - 1, m);
}

// Residues here are relative to h_1; an unoccupied relative class is an unoccupied class.
bool AdmissibilityTester::window_has_gap(std::uint64_t p, std::uint64_t m) const {
  for (std::uint64_t r = 0; r <= m; ++r) {
    bool occupied = false;
    for (std::uint64_t i = r; i < span_; i += p) {
      if (bit(i)) {
        occupied = true;
        break;
      }
    }
    if (!occupied) return true;
  }
  return false;
}

bool AdmissibilityTester::admissible_mod(std::uint64_t p) const {
  if (offsets_.size() < p) return true;
  if (!bits_.empty()) {
    auto m = window_length(p, offsets_.size());
    if (m > 0 && window_has_gap(p, m)) return true;
  }
  return admissible_mod_naive(offsets_, p);
}

std::optional<std::uint64_t> AdmissibilityTester::obstruction() const {
  for (auto p : primes_up_to(offsets_.size())) {
    if (!admissible_mod(p)) return p;
  }
  return std::nullopt;
}

bool AdmissibilityTester::admissible() const { return !obstruction().has_value(); }

bool is_admissible(std::span<const std::int64_t> offsets) {
  return AdmissibilityTester(offsets).admissible();
}

bool is_admissible(const Tuple& t) { return is_admissible(t.offsets()); }

std::optional<std::uint64_t> first_obstruction(const Tuple& t) {
  return AdmissibilityTester(t.offsets()).obstruction();
}

}  // namespace bgaps::admissible
