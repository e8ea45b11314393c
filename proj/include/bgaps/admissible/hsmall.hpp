#pragma once

#include <cstddef>
#include <cstdint>

namespace bgaps::admissible {

// Minimal diameter of an admissible k-tuple with diameter <= dmax, by exhaustive
// search over offset sets starting at 0. Requires k <= 6 and dmax <= 64.
// Throws std::runtime_error("no admissible tuple within dmax") when none exists.
std::int64_t h_exact_small(std::size_t k, std::int64_t dmax);

}  // namespace bgaps::admissible
