#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>

#include "bgaps/common/rational.hpp"
#include "bgaps/symmpoly/signature.hpp"
#include "bgaps/symmpoly/sympoly.hpp"

namespace bgaps::symmpoly {

Integer factorial(unsigned n);

// Integral over the unit simplex R_k of (1 - t_1 - ... - t_k)^a * prod t_i^{e_i}, k = e.size() >= 1.
Rational beta_integral(unsigned a, std::span<const unsigned> e);

// P_(1) * f, in f's own dimension.
SymPoly times_p1(const SymPoly& f);

// Symmetric algebra in k variables with a degree cap and a memoized product table.
class Algebra {
 public:
  using Constants = std::map<Signature, Integer>;

  Algebra(unsigned k, unsigned degree_cap);

  unsigned k() const { return k_; }
  unsigned degree_cap() const { return cap_; }

  SymPoly one() const { return SymPoly::constant(k_, 1); }
  SymPoly p1() const { return SymPoly::monomial(k_, Signature{1}); }

  // c_{alpha,beta,gamma} with P_alpha P_beta = sum_gamma c * P_gamma.
  const Constants& structure_constants(const Signature& alpha, const Signature& beta) const;

  SymPoly multiply(const SymPoly& f, const SymPoly& g) const;

  // Integral of f over scale * R_k.
  Rational integrate(const SymPoly& f, const Rational& scale = 1) const;
  // Integral over R_k of (1 - P_(1))^a * f.
  Rational integrate_affine(unsigned a, const SymPoly& f) const;

  // (Lf)(t) = sum_i integral_0^{1 - sum_{j != i} t_j} f(t with t_i replaced) dt_i.
  SymPoly apply_L(const SymPoly& f) const;

  Rational inner_product(const SymPoly& f, const SymPoly& g) const;

 private:
  void check(const SymPoly& f) const;
  Constants compute_constants(const Signature& alpha, const Signature& beta) const;

  unsigned k_;
  unsigned cap_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Signature, Signature>, std::unique_ptr<Constants>> table_;
};

// Integral over R_k of P_alpha (the orbit count times one monomial's Beta integral).
Rational integrate_monomial(const Signature& alpha, unsigned k, unsigned affine_power = 0);

}  // namespace bgaps::symmpoly
