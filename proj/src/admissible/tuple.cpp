#include "bgaps/admissible/tuple.hpp"

#include <stdexcept>
#include <string>

namespace bgaps::admissible {

Tuple::Tuple(std::vector<std::int64_t> offsets) : offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw std::invalid_argument("tuple must have k >= 1 elements");
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    if (offsets_[i] <= offsets_[i - 1]) {
      throw std::invalid_argument("tuple offsets must be strictly increasing (index " +
                                  std::to_string(i) + ")");
    }
  }
}

Tuple Tuple::shifted(std::int64_t c) const {
  std::vector<std::int64_t> out(offsets_);
  for (auto& h : out) h += c;
  return Tuple(std::move(out));
}

}  // namespace bgaps::admissible
