#include "bgaps/admissible/gap_encoding.hpp"

#include <stdexcept>

namespace bgaps::admissible {

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  if (bytes.size() - pos < 8) throw std::invalid_argument("malformed gap stream: truncated word");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{bytes[pos + i]} << (8 * i);
  pos += 8;
  return v;
}

}  // namespace

GapEncoding encode_gaps(const Tuple& t) {
  GapEncoding g;
  g.first = t.front();
  g.gaps.reserve(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) {
    g.gaps.push_back(static_cast<std::uint64_t>(t[i] - t[i - 1]));
  }
  return g;
}

Tuple decode_gaps(const GapEncoding& g) {
  std::vector<std::int64_t> offsets;
  offsets.reserve(g.gaps.size() + 1);
  std::int64_t h = g.first;
  offsets.push_back(h);
  for (auto gap : g.gaps) {
    if (gap == 0) throw std::invalid_argument("malformed gap encoding: zero gap");
    h += static_cast<std::int64_t>(gap);
    offsets.push_back(h);
  }
  return Tuple(std::move(offsets));
}

std::vector<std::uint8_t> to_bytes(const GapEncoding& g) {
  std::vector<std::uint8_t> out;
  out.reserve(16 + g.gaps.size());
  put_u64(out, static_cast<std::uint64_t>(g.first));
  put_u64(out, g.gaps.size());
  for (auto gap : g.gaps) {
    if (gap > 0 && gap < 256) {
      out.push_back(static_cast<std::uint8_t>(gap));
    } else {
      out.push_back(0);
      put_u64(out, gap);
    }
  }
  return out;
}

GapEncoding from_bytes(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  GapEncoding g;
  g.first = static_cast<std::int64_t>(get_u64(bytes, pos));
  std::uint64_t count = get_u64(bytes, pos);
  if (count > bytes.size() - pos) throw std::invalid_argument("malformed gap stream: bad count");
  g.gaps.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (pos >= bytes.size()) throw std::invalid_argument("malformed gap stream: truncated gaps");
    std::uint8_t b = bytes[pos++];
    std::uint64_t gap = b != 0 ? b : get_u64(bytes, pos);
    if (gap == 0) throw std::invalid_argument("malformed gap stream: zero gap");
    g.gaps.push_back(gap);
  }
  if (pos != bytes.size()) throw std::invalid_argument("malformed gap stream: trailing bytes");
  return g;
}

}  // namespace bgaps::admissible
