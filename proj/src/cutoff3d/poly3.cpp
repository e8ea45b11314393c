#include "bgaps/cutoff3d/poly3.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bgaps::cutoff3d {

Poly3::Poly3(const Rational& c) { add_term({0, 0, 0}, c); }

Poly3 Poly3::variable(Var v) {
  Poly3 p;
  Exponent e{0, 0, 0};
  e[v] = 1;
  p.add_term(e, 1);
  return p;
}

unsigned Poly3::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

Rational Poly3::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly3::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly3 Poly3::operator-() const {
  Poly3 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

Poly3 Poly3::substitute(Var v, const Poly3& q) const {
  std::vector<Poly3> powers{Poly3(1)};
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[v]) powers.push_back(powers.back() * q);
    Exponent rest = e;
    rest[v] = 0;
    Poly3 mono;
    mono.add_term(rest, c);
    out += mono * powers[e[v]];
  }
  return out;
}

Poly3 Poly3::compose(const std::array<Poly3, 3>& args) const {
  std::array<std::vector<Poly3>, 3> powers;
  for (auto& p : powers) p.push_back(Poly3(1));
  Poly3 out;
  for (const auto& [e, c] : terms_) {
    Poly3 term(c);
    for (unsigned v = 0; v < 3; ++v) {
      while (powers[v].size() <= e[v]) powers[v].push_back(powers[v].back() * args[v]);
      term = term * powers[v][e[v]];
    }
    out += term;
  }
  return out;
}

Poly3 Poly3::integrate(Var v, const Poly3& lo, const Poly3& hi) const {
  Poly3 anti;
  for (const auto& [e, c] : terms_) {
    Exponent up = e;
    ++up[v];
    anti.add_term(up, c / Rational(up[v]));
  }
  return anti.substitute(v, hi) - anti.substitute(v, lo);
}

Rational Poly3::eval(const Rational& x, const Rational& y, const Rational& z) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += c * pow(x, e[0]) * pow(y, e[1]) * pow(z, e[2]);
  return total;
}

std::string Poly3::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[] = {"x", "y", "z"};
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = e[0] + e[1] + e[2] == 0;
    if (constant || mag != 1) out << bgaps::to_string(mag);
    for (unsigned v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      out << (constant || mag != 1 ? " " : "") << names[v];
      if (e[v] > 1) out << '^' << e[v];
      constant = false;
      mag = 0;
    }
    first = false;
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Rational& eps) : s_(s), eps_(eps) {}

  Poly3 parse() {
    Poly3 out;
    skip();
    if (pos_ == s_.size()) throw error("empty polynomial");
    while (pos_ < s_.size()) out += term();
    return out;
  }

 private:
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer number() {
    skip();
    auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw error("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Poly3 term() {
    Rational sign = 1;
    if (eat('-')) {
      sign = -1;
    } else {
      eat('+');
    }
    Poly3 t(sign);
    bool any = false;
    if (at_digit()) {
      t = t * Poly3(Rational(number()));
      any = true;
    }
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == '*') {
        ++pos_;
        continue;
      }
      if (s_.substr(pos_, 3) == "eps") {
        pos_ += 3;
        t = t * Poly3(eps_);
      } else if (c == 'x' || c == 'y' || c == 'z') {
        ++pos_;
        auto v = static_cast<Var>(c - 'x');
        unsigned e = 1;
        if (eat('^')) e = static_cast<unsigned>(number().get_ui());
        for (unsigned i = 0; i < e; ++i) t = t * Poly3::variable(v);
      } else if (c == '/') {
        ++pos_;
        t = t * Poly3(Rational(1) / Rational(number()));
        continue;
      } else {
        break;
      }
      any = true;
    }
    if (!any) throw error("expected a term");
    return t;
  }

  std::string_view s_;
  Rational eps_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly3 parse_poly3(std::string_view text, const Rational& eps) { return Parser(text, eps).parse(); }

}  // namespace bgaps::cutoff3d
