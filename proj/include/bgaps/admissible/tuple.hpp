#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bgaps::admissible {

// Strictly increasing integer offsets (h_1, ..., h_k), k >= 1.
class Tuple {
 public:
  explicit Tuple(std::vector<std::int64_t> offsets);

  std::size_t size() const { return offsets_.size(); }
  std::int64_t diameter() const { return offsets_.back() - offsets_.front(); }
  std::int64_t front() const { return offsets_.front(); }
  std::int64_t back() const { return offsets_.back(); }
  std::int64_t operator[](std::size_t i) const { return offsets_[i]; }
  std::span<const std::int64_t> offsets() const { return offsets_; }

  Tuple shifted(std::int64_t c) const;

  bool operator==(const Tuple&) const = default;

 private:
  std::vector<std::int64_t> offsets_;
};

}  // namespace bgaps::admissible
