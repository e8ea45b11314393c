#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "bgaps/common/rational.hpp"

namespace bgaps::symmpoly {

// Non-increasing list of positive parts; the empty signature indexes the constant 1.
class Signature {
 public:
  Signature() = default;
  // Sorts and drops zeros, so any exponent vector may be passed.
  explicit Signature(std::vector<unsigned> parts);
  Signature(std::initializer_list<unsigned> parts) : Signature(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned degree() const { return degree_; }
  bool empty() const { return parts_.empty(); }

  // Multiplicity of value v among the parts.
  std::size_t count(unsigned v) const;
  bool all_even() const;
  bool has_part(unsigned v) const { return count(v) > 0; }

  // Copy with one occurrence of v removed (v = 0 returns *this).
  Signature without(unsigned v) const;
  // Copy with one occurrence of v raised to v + 1 (v = 0 appends a part 1).
  Signature raised(unsigned v) const;

  // Distinct part values, descending.
  std::vector<unsigned> distinct() const;

  std::string to_string() const;  // "[4,2,2]"

  auto operator<=>(const Signature& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Signature& o) const { return parts_ == o.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned degree_ = 0;
};

// Number of distinct exponent vectors in k variables with signature alpha.
Integer orbit_size(const Signature& alpha, unsigned k);

// All signatures with degree <= d and length <= k, optionally even parts only,
// ordered by degree then lexicographically.
std::vector<Signature> signatures_up_to(unsigned d, unsigned k, bool even_only);

}  // namespace bgaps::symmpoly
