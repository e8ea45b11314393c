#include "bgaps/common/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bgaps {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  }
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational pow(const Rational& base, unsigned e) {
  Rational result = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)));
    Integer den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool negative = s.front() == '-';
    std::string_view body = (s.front() == '-' || s.front() == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed decimal: '" + std::string(s) + "'");
    }
    Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Rational q(num, pow10(static_cast<unsigned>(frac.size())));
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational floor_to_denominator(const Rational& q, const Integer& denominator) {
  Integer scaled = q.get_num() * denominator;
  Integer quot;
  mpz_fdiv_q(quot.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Rational r(quot, denominator);
  r.canonicalize();
  return r;
}

Rational ceil_to_denominator(const Rational& q, const Integer& denominator) {
  Integer scaled = q.get_num() * denominator;
  Integer quot;
  mpz_cdiv_q(quot.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Rational r(quot, denominator);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& q, unsigned digits) {
  Integer scale = pow10(digits);
  Integer scaled = q.get_num() * scale;
  Integer t;
  mpz_tdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  bool negative = q < 0;
  if (negative) t = -t;
  std::string s = t.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace bgaps
