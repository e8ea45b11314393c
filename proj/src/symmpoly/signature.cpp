#include "bgaps/symmpoly/signature.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bgaps::symmpoly {

namespace {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

Signature::Signature(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::erase(parts_, 0u);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::size_t Signature::count(unsigned v) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), v));
}

bool Signature::all_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](unsigned p) { return p % 2 == 0; });
}

Signature Signature::without(unsigned v) const {
  if (v == 0) return *this;
  auto p = parts_;
  auto it = std::find(p.begin(), p.end(), v);
  if (it != p.end()) p.erase(it);
  return Signature(std::move(p));
}

Signature Signature::raised(unsigned v) const {
  auto p = parts_;
  if (v == 0) {
    p.push_back(1);
  } else {
    auto it = std::find(p.begin(), p.end(), v);
    if (it != p.end()) ++*it;
  }
  return Signature(std::move(p));
}

std::vector<unsigned> Signature::distinct() const {
  std::vector<unsigned> d;
  for (auto p : parts_) {
    if (d.empty() || d.back() != p) d.push_back(p);
  }
  return d;
}

std::string Signature::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Integer orbit_size(const Signature& alpha, unsigned k) {
  if (alpha.length() > k) return 0;
  Integer r = factorial(k) / factorial(k - static_cast<unsigned>(alpha.length()));
  for (auto v : alpha.distinct()) r /= factorial(static_cast<unsigned>(alpha.count(v)));
  return r;
}

std::vector<Signature> signatures_up_to(unsigned d, unsigned k, bool even_only) {
  std::vector<Signature> out;
  std::vector<unsigned> cur;
  unsigned step = even_only ? 2 : 1;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) {
    out.emplace_back(cur);
    if (cur.size() == k) return;
    for (unsigned p = std::min(left, maxpart); p >= step; --p) {
      if (p % step != 0) continue;
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  return out;
}

}  // namespace bgaps::symmpoly
