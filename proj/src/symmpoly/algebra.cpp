#include "bgaps/symmpoly/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgaps::symmpoly {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational beta_integral(unsigned a, std::span<const unsigned> e) {
  if (e.empty()) throw std::invalid_argument("beta_integral needs k >= 1");
  Integer num = factorial(a);
  unsigned total = a + static_cast<unsigned>(e.size());
  for (auto x : e) {
    num *= factorial(x);
    total += x;
  }
  Rational r(num, factorial(total));
  r.canonicalize();
  return r;
}

Rational integrate_monomial(const Signature& alpha, unsigned k, unsigned affine_power) {
  if (alpha.length() > k) return 0;
  Integer num = orbit_size(alpha, k) * factorial(affine_power);
  for (auto p : alpha.parts()) num *= factorial(p);
  Rational r(num, factorial(alpha.degree() + k + affine_power));
  r.canonicalize();
  return r;
}

SymPoly times_p1(const SymPoly& f) {
  SymPoly r(f.k());
  for (const auto& [beta, c] : f.terms()) {
    auto values = beta.distinct();
    if (beta.length() < f.k()) values.push_back(0);
    for (auto w : values) {
      auto gamma = beta.raised(w);
      r.add_term(gamma, c * static_cast<unsigned long>(gamma.count(w + 1)));
    }
  }
  return r;
}

Algebra::Algebra(unsigned k, unsigned degree_cap) : k_(k), cap_(degree_cap) {
  if (k == 0) throw std::invalid_argument("symmetric algebra needs k >= 1");
}

void Algebra::check(const SymPoly& f) const {
  if (f.k() != k_) throw std::invalid_argument("polynomial dimension does not match the algebra");
}

// Fix the exponent vector (alpha, 0, ..., 0) and count the vectors b with signature beta,
// grouped by the signature of the sum; then rescale by the orbit sizes.
Algebra::Constants Algebra::compute_constants(const Signature& alpha, const Signature& beta) const {
  const auto& a = alpha.parts();
  std::size_t l = a.size();
  std::map<unsigned, unsigned> left;
  for (auto p : beta.parts()) ++left[p];
  std::map<Signature, Integer> hits;
  std::vector<unsigned> sum(a.begin(), a.end());

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == l) {
      unsigned outside = 0;
      std::vector<unsigned> parts = sum;
      for (const auto& [v, n] : left) {
        outside += n;
        for (unsigned j = 0; j < n; ++j) parts.push_back(v);
      }
      if (outside > k_ - l) return;
      Integer ways = factorial(k_ - static_cast<unsigned>(l)) / factorial(k_ - static_cast<unsigned>(l) - outside);
      for (const auto& [v, n] : left) ways /= factorial(n);
      hits[Signature(std::move(parts))] += ways;
      return;
    }
    place(i + 1);
    for (auto& [v, n] : left) {
      if (n == 0) continue;
      --n;
      sum[i] += v;
      place(i + 1);
      sum[i] -= v;
      ++n;
    }
  };
  place(0);

  Constants out;
  auto orb_alpha = orbit_size(alpha, k_);
  for (auto& [gamma, n] : hits) {
    Integer c = orb_alpha * n;
    auto orb_gamma = orbit_size(gamma, k_);
    if (c % orb_gamma != 0) throw std::logic_error("non-integral structure constant");
    out.emplace(gamma, c / orb_gamma);
  }
  return out;
}

const Algebra::Constants& Algebra::structure_constants(const Signature& alpha, const Signature& beta) const {
  auto key = alpha <= beta ? std::make_pair(alpha, beta) : std::make_pair(beta, alpha);
  {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return *it->second;
  }
  if (alpha.degree() + beta.degree() > cap_) {
    throw std::out_of_range("product degree " + std::to_string(alpha.degree() + beta.degree()) +
                            " exceeds the degree cap " + std::to_string(cap_));
  }
  auto computed = std::make_unique<Constants>(compute_constants(key.first, key.second));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = table_.try_emplace(key, std::move(computed));
  return *it->second;
}

SymPoly Algebra::multiply(const SymPoly& f, const SymPoly& g) const {
  check(f);
  check(g);
  SymPoly r(k_);
  for (const auto& [alpha, a] : f.terms()) {
    for (const auto& [beta, b] : g.terms()) {
      Rational ab = a * b;
      for (const auto& [gamma, c] : structure_constants(alpha, beta)) r.add_term(gamma, ab * c);
    }
  }
  return r;
}

Rational Algebra::integrate(const SymPoly& f, const Rational& scale) const {
  check(f);
  if (scale <= 0) throw std::invalid_argument("integration scale must be positive");
  Rational total = 0;
  for (const auto& [alpha, c] : f.terms()) {
    total += c * integrate_monomial(alpha, k_) * pow(scale, alpha.degree() + k_);
  }
  return total;
}

Rational Algebra::integrate_affine(unsigned a, const SymPoly& f) const {
  check(f);
  Rational total = 0;
  for (const auto& [alpha, c] : f.terms()) total += c * integrate_monomial(alpha, k_, a);
  return total;
}

// Integrating slot i turns t_i^v into (1 - S)^{v+1} / (v+1), S the sum of the other k-1
// variables; the k-1 variable result h is summed over i, and a term P_gamma of h
// contributes (k - len gamma) P_gamma.
SymPoly Algebra::apply_L(const SymPoly& f) const {
  check(f);
  if (f.degree() + 1 > cap_) throw std::out_of_range("apply_L result exceeds the degree cap");
  unsigned n = k_ - 1;
  std::vector<SymPoly> g;
  for (const auto& [alpha, c] : f.terms()) {
    auto values = alpha.distinct();
    if (alpha.length() < k_) values.push_back(0);
    for (auto v : values) {
      if (g.size() <= v) g.resize(v + 1, SymPoly(n));
      g[v].add_term(alpha.without(v), c);
    }
  }
  SymPoly h(n);
  for (std::size_t v = g.size(); v-- > 0;) {
    Rational inv(1, static_cast<unsigned long>(v + 1));
    for (const auto& [beta, c] : g[v].terms()) h.add_term(beta, c * inv);
    auto shifted = times_p1(h);
    for (const auto& [gamma, c] : shifted.terms()) h.add_term(gamma, -c);
  }
  SymPoly out(k_);
  for (const auto& [gamma, c] : h.terms()) {
    out.add_term(gamma, c * static_cast<unsigned long>(k_ - gamma.length()));
  }
  return out;
}

Rational Algebra::inner_product(const SymPoly& f, const SymPoly& g) const { return integrate(multiply(f, g)); }

}  // namespace bgaps::symmpoly
