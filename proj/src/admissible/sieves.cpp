#include "bgaps/admissible/sieves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "bgaps/admissible/admissibility.hpp"
#include "bgaps/admissible/primes.hpp"

namespace bgaps::admissible {

namespace {

constexpr std::uint64_t kMaxInterval = std::numeric_limits<std::uint32_t>::max();

void require_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("sieve constructions need k >= 2");
}

std::vector<std::int64_t> as_signed(const std::vector<std::uint64_t>& v) {
  return {v.begin(), v.end()};
}

double k_log_k(std::size_t k) {
  auto kd = static_cast<double>(k);
  return kd * std::log(kd);
}

// Admissibility modulo the primes q <= k with q >= from; smaller primes are known to be fine.
bool admissible_from(std::span<const std::int64_t> offsets, const std::vector<std::uint64_t>& primes_k,
                     std::uint64_t from) {
  AdmissibilityTester tester(offsets);
  auto it = std::lower_bound(primes_k.begin(), primes_k.end(), from);
  for (; it != primes_k.end(); ++it) {
    if (!tester.admissible_mod(*it)) return false;
  }
  return true;
}

std::int64_t even_floor(std::int64_t v) { return v - (((v % 2) + 2) % 2); }

// ---------------------------------------------------------------------------
// Shifted Schinzel: even n in [s, s + x] whose smallest odd prime factor exceeds p_m.

struct Outcome {
  std::vector<std::int64_t> tuple;
  std::uint64_t m = 0;
  std::int64_t x = 0;
  std::optional<SieveRecord> record;
};

class SchinzelSweep {
 public:
  SchinzelSweep(std::size_t k, const std::vector<std::uint64_t>& primes_k)
      : k_(k), primes_(primes_k), pi_(primes_k.size()) {}

  Outcome run(std::int64_t s, std::int64_t length_hint) {
    s_ = s;
    build_index(std::max<std::int64_t>(length_hint, 2 * static_cast<std::int64_t>(k_)));
    return finish(sweep());
  }

 private:
  static constexpr std::uint32_t kNotEven = 0;

  std::uint32_t none() const { return static_cast<std::uint32_t>(pi_ + 1); }

  // Smallest odd prime factor index of each even n in [s, s + x]; x ends at the k-th survivor.
  void build_index(std::int64_t length) {
    for (;;) {
      if (static_cast<std::uint64_t>(length) >= kMaxInterval) {
        throw std::overflow_error("sieve interval exceeds 32-bit offsets");
      }
      idx_.assign(static_cast<std::size_t>(length) + 1, kNotEven);
      std::int64_t first_even = s_ % 2 == 0 ? 0 : 1;
      for (auto r = first_even; r <= length; r += 2) idx_[r] = none();
      for (std::size_t j = 2; j <= pi_; ++j) {
        auto p = primes_[j - 1];
        auto r0 = (p - residue(s_, p)) % p;
        for (auto r = r0; r <= static_cast<std::uint64_t>(length); r += p) {
          if (idx_[r] == none()) idx_[r] = static_cast<std::uint32_t>(j);
        }
      }
      std::size_t seen = 0;
      for (std::size_t r = 0; r < idx_.size(); ++r) {
        if (idx_[r] == none() && ++seen == k_) {
          idx_.resize(r + 1);
          x_ = static_cast<std::int64_t>(r);
          return;
        }
      }
      length = length * 2 + 16;
    }
  }

  bool alive(std::uint64_t r) const { return (alive_[r >> 6] >> (r & 63)) & 1u; }
  void set_alive(std::uint64_t r) { alive_[r >> 6] |= std::uint64_t{1} << (r & 63); }

  std::uint64_t prev_alive(std::uint64_t r) const {
    do {
      --r;
    } while (!alive(r));
    return r;
  }

  // Whether the window [0, end] of survivors misses a class modulo p.
  bool window_admissible_mod(std::uint64_t p, std::uint64_t end) {
    seen_.assign(p, 0);
    auto sm = residue(s_, p);
    std::uint64_t distinct = 0;
    for (std::uint64_t w = 0; w <= end >> 6; ++w) {
      for (auto bits = alive_[w]; bits != 0; bits &= bits - 1) {
        auto r = (w << 6) + static_cast<std::uint64_t>(__builtin_ctzll(bits));
        if (r > end) break;
        auto c = (sm + r) % p;
        if (!seen_[c]) {
          seen_[c] = 1;
          if (++distinct == p) return false;
        }
      }
    }
    return true;
  }

  // Decrement m from pi(k) while the first k survivors stay admissible modulo the
  // prime that stops being sieved.
  std::uint64_t sweep() {
    auto n = idx_.size();
    std::vector<std::vector<std::uint32_t>> buckets(pi_ + 1);
    alive_.assign((n + 63) / 64, 0);
    for (std::size_t r = 0; r < n; ++r) {
      auto i = idx_[r];
      if (i == none()) {
        set_alive(r);
      } else if (i != kNotEven) {
        buckets[i].push_back(static_cast<std::uint32_t>(r));
      }
    }
    std::uint64_t end = n - 1;
    std::uint64_t reached = pi_;
    for (std::uint64_t m = pi_; m >= 2; --m) {
      for (auto r : buckets[m]) {
        set_alive(r);
        if (r < end) end = prev_alive(end);
      }
      if (!window_admissible_mod(primes_[m - 1], end)) break;
      reached = m - 1;
    }
    return reached;
  }

  std::vector<std::int64_t> survivors(std::uint64_t m) const {
    std::vector<std::int64_t> surv;
    for (std::size_t r = 0; r < idx_.size(); ++r) {
      auto i = idx_[r];
      if (i != kNotEven && i > m) surv.push_back(s_ + static_cast<std::int64_t>(r));
    }
    return surv;
  }

  Outcome finish(std::uint64_t m) {
    std::vector<std::int64_t> surv;
    for (;; ++m) {
      surv = survivors(m);
      if (m >= pi_ || is_admissible(std::span<const std::int64_t>(surv.data(), k_))) break;
    }
    std::vector<std::int64_t> tuple(surv.begin(), surv.begin() + static_cast<std::ptrdiff_t>(k_));
    auto w = narrowest_window(surv, k_);
    if (surv[w + k_ - 1] - surv[w] < tuple.back() - tuple.front()) {
      std::vector<std::int64_t> alt(surv.begin() + static_cast<std::ptrdiff_t>(w),
                                    surv.begin() + static_cast<std::ptrdiff_t>(w + k_));
      if (is_admissible(alt)) tuple = std::move(alt);
    }
    Outcome out;
    out.m = m;
    out.x = x_;
    out.record = SieveRecord{k_, tuple.front(), tuple.back() - tuple.front(), m, {}};
    out.tuple = std::move(tuple);
    return out;
  }

  std::size_t k_;
  const std::vector<std::uint64_t>& primes_;
  std::size_t pi_;
  std::int64_t s_ = 0;
  std::int64_t x_ = 0;
  std::vector<std::uint32_t> idx_;
  std::vector<std::uint64_t> alive_;
  std::vector<char> seen_;
};

// ---------------------------------------------------------------------------
// Shifted greedy.

class GreedySieve {
 public:
  GreedySieve(std::size_t k, const SieveConfig& cfg, const std::vector<std::uint64_t>& primes_k)
      : k_(k), cfg_(cfg), primes_(primes_k) {
    double bound = cfg.greedy_multiplier * std::sqrt(k_log_k(k));
    small_ = static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint64_t>(bound)) -
        primes_.begin());
  }

  // Survivors (relative offsets) of the sieve on [s, s + x].
  std::vector<std::uint32_t> survivors(std::int64_t s, std::int64_t x,
                                       std::vector<std::pair<std::uint64_t, std::uint64_t>>* classes) const {
    if (static_cast<std::uint64_t>(x) >= kMaxInterval) {
      throw std::overflow_error("sieve interval exceeds 32-bit offsets");
    }
    std::vector<char> keep(static_cast<std::size_t>(x) + 1, 0);
    for (auto r = (s % 2 == 0 ? 0 : 1); r <= x; r += 2) keep[r] = 1;
    for (std::size_t j = 2; j <= small_; ++j) {
      auto p = primes_[j - 1];
      for (auto r = (p - residue(s, p)) % p; r <= static_cast<std::uint64_t>(x); r += p) keep[r] = 0;
    }
    std::vector<std::uint32_t> surv;
    for (std::size_t r = 0; r < keep.size(); ++r) {
      if (keep[r]) surv.push_back(static_cast<std::uint32_t>(r));
    }

    std::size_t j = small_ + 1;
    std::vector<std::uint64_t> batch_p;
    std::vector<std::uint64_t> batch_r;
    while (j <= primes_.size()) {
      auto n = surv.size();
      batch_p.clear();
      for (; j <= primes_.size() && batch_p.size() < cfg_.batch; ++j) {
        if (primes_[j - 1] > n) break;
        batch_p.push_back(j);
      }
      if (batch_p.empty()) break;
      batch_r.assign(batch_p.size(), 0);
      choose_classes(s, surv, batch_p, batch_r);
      std::vector<std::uint64_t> smod(batch_p.size());
      for (std::size_t i = 0; i < batch_p.size(); ++i) smod[i] = residue(s, primes_[batch_p[i] - 1]);
      std::erase_if(surv, [&](std::uint32_t r) {
        for (std::size_t i = 0; i < batch_p.size(); ++i) {
          if ((smod[i] + r) % primes_[batch_p[i] - 1] == batch_r[i]) return true;
        }
        return false;
      });
      if (classes) {
        for (std::size_t i = 0; i < batch_p.size(); ++i) classes->emplace_back(batch_p[i], batch_r[i]);
      }
      if (batch_p.size() < cfg_.batch) break;
    }
    return surv;
  }

  std::size_t count(std::int64_t s, std::int64_t x) const { return survivors(s, x, nullptr).size(); }

  // Smallest x (by bisection) giving at least k survivors, starting near `hint`.
  std::int64_t minimal_length(std::int64_t s, std::int64_t hint) const {
    auto kk = static_cast<std::int64_t>(k_);
    std::int64_t hi = std::max<std::int64_t>(hint, 2 * kk);
    while (count(s, hi) < k_) hi = hi + hi / 20 + 16;
    std::int64_t lo = hi - hi / 20 - 1;
    while (lo > 0 && count(s, lo) >= k_) {
      hi = lo;
      lo = lo - lo / 20 - 1;
    }
    lo = std::max<std::int64_t>(lo, 0);
    while (hi - lo > 1) {
      auto mid = lo + (hi - lo) / 2;
      if (count(s, mid) >= k_) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  }

  Outcome run(std::int64_t s, std::int64_t hint) const {
    auto x = minimal_length(s, hint);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
    auto rel = survivors(s, x, &classes);
    std::vector<std::int64_t> surv;
    surv.reserve(rel.size());
    for (auto r : rel) surv.push_back(s + r);
    auto w = narrowest_window(surv, k_);
    Outcome out;
    out.tuple.assign(surv.begin() + static_cast<std::ptrdiff_t>(w),
                     surv.begin() + static_cast<std::ptrdiff_t>(w + k_));
    out.m = small_;
    out.x = x;
    out.record = SieveRecord{k_, out.tuple.front(), out.tuple.back() - out.tuple.front(), small_,
                             std::move(classes)};
    return out;
  }

 private:
  void choose_classes(std::int64_t s, const std::vector<std::uint32_t>& surv,
                      const std::vector<std::uint64_t>& batch_p, std::vector<std::uint64_t>& batch_r) const {
    auto work = [&](std::size_t first, std::size_t step) {
      std::vector<std::uint32_t> counts;
      for (std::size_t i = first; i < batch_p.size(); i += step) {
        auto p = primes_[batch_p[i] - 1];
        auto sm = residue(s, p);
        counts.assign(p, 0);
        for (auto r : surv) ++counts[(sm + r) % p];
        batch_r[i] = static_cast<std::uint64_t>(std::min_element(counts.begin(), counts.end()) - counts.begin());
      }
    };
    unsigned t = std::max(1u, cfg_.threads);
    if (t == 1 || batch_p.size() == 1) {
      work(0, 1);
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < t; ++i) pool.emplace_back(work, i, t);
    work(0, t);
    for (auto& th : pool) th.join();
  }

  std::size_t k_;
  SieveConfig cfg_;
  const std::vector<std::uint64_t>& primes_;
  std::size_t small_ = 0;
};

template <class Run>
Outcome search_shifts(std::int64_t x, const SieveConfig& cfg, Run&& run) {
  ShiftRange range = cfg.search.value_or(ShiftRange{-x / 2, x / 2, std::max<std::int64_t>(1, x / 1000)});
  if (range.stride < 1 || range.hi < range.lo) throw std::invalid_argument("bad shift search range");
  std::optional<Outcome> best;
  std::int64_t best_s = 0;
  auto consider = [&](std::int64_t s) {
    auto o = run(s);
    auto d = o.tuple.back() - o.tuple.front();
    if (!best || d < best->tuple.back() - best->tuple.front()) {
      best = std::move(o);
      best_s = s;
    }
  };
  for (auto s = range.lo; s <= range.hi; s += range.stride) consider(s);
  if (cfg.refine && range.stride > 1) {
    auto centre = best_s;
    for (auto s = centre - range.stride + 1; s < centre + range.stride; ++s) {
      if (s != centre) consider(s);
    }
  }
  return std::move(*best);
}

SieveResult to_result(Outcome o, std::int64_t shift) {
  return SieveResult{Tuple(std::move(o.tuple)), shift, o.m, std::move(o.record)};
}

}  // namespace

std::string_view to_string(SieveMethod m) {
  switch (m) {
    case SieveMethod::eratosthenes: return "eratosthenes";
    case SieveMethod::k_primes_past_k: return "k-primes-past-k";
    case SieveMethod::hensley_richards: return "hensley-richards";
    case SieveMethod::shifted_schinzel: return "shifted-schinzel";
    case SieveMethod::shifted_greedy: return "shifted-greedy";
  }
  return "?";
}

SieveMethod parse_sieve_method(std::string_view name) {
  for (auto m : {SieveMethod::eratosthenes, SieveMethod::k_primes_past_k, SieveMethod::hensley_richards,
                 SieveMethod::shifted_schinzel, SieveMethod::shifted_greedy}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown sieve method: " + std::string(name));
}

void SieveConfig::validate() const {
  if (batch == 0) throw std::invalid_argument("batch size must be positive");
  if (threads == 0) throw std::invalid_argument("thread count must be positive");
  if (threads > 1 && batch % threads != 0) {
    throw std::invalid_argument("batch size must be a multiple of the thread count");
  }
  if (!(greedy_multiplier > 0)) throw std::invalid_argument("greedy multiplier must be positive");
  if (search && (search->stride < 1 || search->hi < search->lo)) {
    throw std::invalid_argument("bad shift search range");
  }
}

std::size_t narrowest_window(const std::vector<std::int64_t>& sorted, std::size_t k) {
  if (k == 0 || sorted.size() < k) throw std::invalid_argument("fewer survivors than k");
  std::size_t best = 0;
  for (std::size_t i = 1; i + k <= sorted.size(); ++i) {
    if (sorted[i + k - 1] - sorted[i] < sorted[best + k - 1] - sorted[best]) best = i;
  }
  return best;
}

Tuple sieve_k_primes_past_k(std::size_t k) {
  require_k(k);
  auto pi = prime_pi(k);
  auto p = first_primes(pi + k);
  return Tuple(std::vector<std::int64_t>(p.begin() + static_cast<std::ptrdiff_t>(pi), p.end()));
}

Tuple sieve_eratosthenes(std::size_t k) {
  require_k(k);
  auto primes_k = primes_up_to(k);
  auto pi = primes_k.size();
  auto p = as_signed(first_primes(pi + k));
  std::size_t m = pi;
  while (m > 0) {
    std::span<const std::int64_t> cand(p.data() + (m - 1), k);
    if (!admissible_from(cand, primes_k, static_cast<std::uint64_t>(cand.front()))) break;
    --m;
  }
  return Tuple(std::vector<std::int64_t>(p.begin() + static_cast<std::ptrdiff_t>(m),
                                         p.begin() + static_cast<std::ptrdiff_t>(m + k)));
}

Tuple sieve_hensley_richards(std::size_t k) {
  require_k(k);
  auto primes_k = primes_up_to(k);
  auto pi = primes_k.size();
  std::size_t neg = k / 2 - 1;
  std::size_t pos = (k + 1) / 2 - 1;
  auto p = as_signed(first_primes(pi + std::max(neg, pos)));
  auto build = [&](std::size_t m) {
    std::vector<std::int64_t> t;
    t.reserve(k);
    for (std::size_t i = neg; i-- > 0;) t.push_back(-p[m + i]);
    t.push_back(-1);
    t.push_back(1);
    for (std::size_t i = 0; i < pos; ++i) t.push_back(p[m + i]);
    return t;
  };
  std::size_t m = pi;
  while (m > 0) {
    auto cand = build(m - 1);
    if (!admissible_from(cand, primes_k, static_cast<std::uint64_t>(p[m - 1]))) break;
    --m;
  }
  return Tuple(build(m));
}

SieveResult sieve_shifted_schinzel(std::size_t k, const SieveConfig& cfg) {
  require_k(k);
  cfg.validate();
  auto primes_k = primes_up_to(k);
  SchinzelSweep sweep(k, primes_k);
  auto hint = static_cast<std::int64_t>(2.0 * k_log_k(k));
  if (cfg.shift) return to_result(sweep.run(*cfg.shift, hint), *cfg.shift);
  auto base = sweep.run(static_cast<std::int64_t>(k), hint);
  auto x = base.tuple.back() - base.tuple.front();
  auto best = search_shifts(x, cfg, [&](std::int64_t s) { return sweep.run(s, base.x); });
  auto shift = best.record ? best.record->s : 0;
  return to_result(std::move(best), shift);
}

SieveResult sieve_shifted_greedy(std::size_t k, const SieveConfig& cfg) {
  require_k(k);
  cfg.validate();
  auto primes_k = primes_up_to(k);
  GreedySieve greedy(k, cfg, primes_k);
  auto hint = static_cast<std::int64_t>(1.2 * k_log_k(k));
  if (cfg.shift) return to_result(greedy.run(*cfg.shift, hint), *cfg.shift);
  auto base = greedy.run(even_floor(-static_cast<std::int64_t>(hint) / 2), hint);
  auto x = base.tuple.back() - base.tuple.front();
  auto best = search_shifts(x, cfg, [&](std::int64_t s) { return greedy.run(s, base.x); });
  auto shift = best.record ? best.record->s : 0;
  return to_result(std::move(best), shift);
}

SieveResult run_sieve(std::size_t k, const SieveConfig& cfg) {
  switch (cfg.method) {
    case SieveMethod::eratosthenes: return {sieve_eratosthenes(k), 0, 0, std::nullopt};
    case SieveMethod::k_primes_past_k: return {sieve_k_primes_past_k(k), 0, 0, std::nullopt};
    case SieveMethod::hensley_richards: return {sieve_hensley_richards(k), 0, 0, std::nullopt};
    case SieveMethod::shifted_schinzel: return sieve_shifted_schinzel(k, cfg);
    case SieveMethod::shifted_greedy: return sieve_shifted_greedy(k, cfg);
  }
  throw std::invalid_argument("unknown sieve method");
}

Tuple realize(const SieveRecord& rec) {
  if (rec.d < 0) throw std::invalid_argument("sieve record has negative diameter");
  std::uint64_t top = rec.m;
  for (const auto& [n, r] : rec.classes) top = std::max(top, n);
  auto primes = first_primes(top);
  std::vector<char> keep(static_cast<std::size_t>(rec.d) + 1, 0);
  for (auto r = (rec.s % 2 == 0 ? 0 : 1); r <= rec.d; r += 2) keep[r] = 1;
  auto strike = [&](std::uint64_t n, std::uint64_t cls) {
    if (n == 0) throw std::invalid_argument("prime index 0 in sieve record");
    auto p = primes[n - 1];
    if (cls >= p) throw std::invalid_argument("residue out of range in sieve record");
    for (auto r = (cls + p - residue(rec.s, p)) % p; r <= static_cast<std::uint64_t>(rec.d); r += p) keep[r] = 0;
  };
  for (std::uint64_t n = 2; n <= rec.m; ++n) strike(n, 0);
  for (const auto& [n, r] : rec.classes) strike(n, r);
  std::vector<std::int64_t> out;
  for (std::size_t r = 0; r < keep.size(); ++r) {
    if (keep[r]) out.push_back(rec.s + static_cast<std::int64_t>(r));
  }
  if (out.size() != rec.k) {
    throw std::invalid_argument("sieve record yields " + std::to_string(out.size()) + " survivors, expected " +
                                std::to_string(rec.k));
  }
  return Tuple(std::move(out));
}

}  // namespace bgaps::admissible
