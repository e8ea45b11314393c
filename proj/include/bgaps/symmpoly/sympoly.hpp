#pragma once

#include <map>
#include <string>

#include "bgaps/common/rational.hpp"
#include "bgaps/symmpoly/signature.hpp"

namespace bgaps::symmpoly {

// Sum of coeff(alpha) * P_alpha in k variables. Zero coefficients are never stored.
class SymPoly {
 public:
  using Terms = std::map<Signature, Rational>;

  explicit SymPoly(unsigned k) : k_(k) {}
  SymPoly(unsigned k, Terms terms);

  static SymPoly constant(unsigned k, const Rational& c);
  static SymPoly monomial(unsigned k, const Signature& alpha, const Rational& c = 1);

  unsigned k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Highest signature degree; 0 for the zero polynomial.
  unsigned degree() const;
  Rational coeff(const Signature& alpha) const;

  // Accumulates c * P_alpha in place; used while building values.
  void add_term(const Signature& alpha, const Rational& c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator-() const;
  SymPoly operator*(const Rational& c) const;
  bool operator==(const SymPoly& o) const = default;

  // "c * P[a,b] + ..." in ascending signature order; "0" when empty.
  std::string dump() const;

 private:
  void check_same_k(const SymPoly& o) const;

  unsigned k_;
  Terms terms_;
};

inline SymPoly operator*(const Rational& c, const SymPoly& f) { return f * c; }

}  // namespace bgaps::symmpoly
