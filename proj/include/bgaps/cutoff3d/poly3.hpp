#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "bgaps/common/rational.hpp"

namespace bgaps::cutoff3d {

enum Var : unsigned { X = 0, Y = 1, Z = 2 };

using Exponent = std::array<unsigned, 3>;

// Polynomial in x, y, z with rational coefficients; zero terms are never stored.
class Poly3 {
 public:
  Poly3() = default;
  Poly3(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly3 variable(Var v);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Poly3 operator-() const;
  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  bool operator==(const Poly3&) const = default;

  // Replace variable v by q.
  Poly3 substitute(Var v, const Poly3& q) const;
  // p(args[0], args[1], args[2]) for polynomial arguments.
  Poly3 compose(const std::array<Poly3, 3>& args) const;
  // Definite integral in v from lo to hi (signed; hi < lo flips the sign).
  Poly3 integrate(Var v, const Poly3& lo, const Poly3& hi) const;
  Rational eval(const Rational& x, const Rational& y, const Rational& z) const;

  std::string to_string() const;

 private:
  std::map<Exponent, Rational> terms_;
};

// Parses sums of terms such as "-66+96 x-147 x^2+51 x y z", "3/2-x-y", "1/2-3eps/2".
// The symbol eps is replaced by the given value.
Poly3 parse_poly3(std::string_view text, const Rational& eps = 0);

}  // namespace bgaps::cutoff3d
