#include "bgaps/symmpoly/sympoly.hpp"

#include <stdexcept>

namespace bgaps::symmpoly {

SymPoly::SymPoly(unsigned k, Terms terms) : k_(k) {
  for (auto& [alpha, c] : terms) add_term(alpha, c);
}

SymPoly SymPoly::constant(unsigned k, const Rational& c) { return monomial(k, Signature{}, c); }

SymPoly SymPoly::monomial(unsigned k, const Signature& alpha, const Rational& c) {
  SymPoly f(k);
  f.add_term(alpha, c);
  return f;
}

unsigned SymPoly::degree() const {
  unsigned d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

Rational SymPoly::coeff(const Signature& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Signature& alpha, const Rational& c) {
  if (alpha.length() > k_) {
    throw std::invalid_argument("signature " + alpha.to_string() + " longer than k=" + std::to_string(k_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymPoly::check_same_k(const SymPoly& o) const {
  if (o.k_ != k_) throw std::invalid_argument("symmetric polynomials in different dimensions");
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  check_same_k(o);
  SymPoly r = *this;
  for (const auto& [alpha, c] : o.terms_) r.add_term(alpha, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator-() const { return *this * Rational(-1); }

SymPoly SymPoly::operator*(const Rational& c) const {
  SymPoly r(k_);
  if (c == 0) return r;
  for (const auto& [alpha, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), alpha, v * c);
  return r;
}

std::string SymPoly::dump() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [alpha, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += bgaps::to_string(c) + " * P" + alpha.to_string();
  }
  return s;
}

}  // namespace bgaps::symmpoly
