#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bgaps/admissible/tuple.hpp"

namespace bgaps::admissible {

// A tuple stored as its first offset plus the k-1 positive consecutive gaps.
struct GapEncoding {
  std::int64_t first = 0;
  std::vector<std::uint64_t> gaps;

  bool operator==(const GapEncoding&) const = default;
};

GapEncoding encode_gaps(const Tuple& t);
Tuple decode_gaps(const GapEncoding& g);

// Byte stream: 8-byte little-endian `first`, 8-byte gap count, then one byte per
// gap below 256; larger gaps are written as a 0x00 escape followed by 8 LE bytes.
std::vector<std::uint8_t> to_bytes(const GapEncoding& g);
// Throws std::invalid_argument on a truncated or otherwise malformed stream.
GapEncoding from_bytes(std::span<const std::uint8_t> bytes);

}  // namespace bgaps::admissible
