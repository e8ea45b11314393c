#include "bgaps/admissible/hsmall.hpp"

#include <stdexcept>
#include <vector>

#include "bgaps/admissible/admissibility.hpp"

namespace bgaps::admissible {

namespace {

// Choose `left` interior offsets from (lo, d) in increasing order.
bool extend(std::vector<std::int64_t>& t, std::size_t left, std::int64_t lo, std::int64_t d) {
  if (left == 0) {
    t.push_back(d);
    bool ok = is_admissible(t);
    t.pop_back();
    return ok;
  }
  for (auto h = lo + 1; h + static_cast<std::int64_t>(left) <= d; ++h) {
    t.push_back(h);
    bool ok = extend(t, left - 1, h, d);
    t.pop_back();
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::int64_t h_exact_small(std::size_t k, std::int64_t dmax) {
  if (k == 0 || k > 6) throw std::invalid_argument("h_exact_small requires 1 <= k <= 6");
  if (dmax < 0 || dmax > 64) throw std::invalid_argument("h_exact_small requires 0 <= dmax <= 64");
  if (k == 1) return 0;
  for (std::int64_t d = static_cast<std::int64_t>(k) - 1; d <= dmax; ++d) {
    std::vector<std::int64_t> t{0};
    if (extend(t, k - 2, 0, d)) return d;
  }
  throw std::runtime_error("no admissible tuple within dmax");
}

}  // namespace bgaps::admissible
