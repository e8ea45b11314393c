#include "bgaps/varprob/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bgaps/varprob/krylov.hpp"

namespace bgaps::varprob {

namespace {

Rational quadratic_form(const RatMatrix& m, const std::vector<Rational>& a) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] != 0) row += m[i][j] * a[j];
    }
    total += a[i] * row;
  }
  return total;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned parse_unsigned(const std::string& s) {
  std::size_t pos = 0;
  auto v = std::stoul(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer in certificate: " + s);
  return static_cast<unsigned>(v);
}

}  // namespace

bool check_quadratic_forms(const RatMatrix& M1, const RatMatrix& M2, const std::vector<Rational>& a,
                           const Rational& C) {
  if (a.size() != M1.size() || a.size() != M2.size()) return false;
  Rational q1 = quadratic_form(M1, a);
  if (q1 <= 0) return false;
  return quadratic_form(M2, a) - C * q1 > 0;
}

BoundCertificate certify(const GramPair& g, const std::vector<Rational>& a, const Rational& C) {
  BoundCertificate c;
  c.variant = g.variant;
  c.d = g.d;
  c.full_signatures = g.full_signatures;
  c.a = a;
  c.C = C;
  c.verified = check_quadratic_forms(g.M1, g.M2, a, C);
  return c;
}

Rational rationalize(const Rational& x, const Integer& bound) {
  if (bound < 1) throw std::invalid_argument("denominator bound must be at least 1");
  if (x < 0) return -rationalize(-x, bound);
  if (x.get_den() <= bound) return x;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = x.get_num(), d = x.get_den();
  for (;;) {
    Integer a = n / d;
    Integer q2 = q0 + a * q1;
    if (q2 > bound) break;
    Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Integer r = n - a * d;
    n = d;
    d = r;
  }
  Integer k = (bound - q0) / q1;
  Rational semi(p0 + k * p1, q0 + k * q1);
  Rational conv(p1, q1);
  semi.canonicalize();
  conv.canonicalize();
  return abs(conv - x) <= abs(semi - x) ? conv : semi;
}

std::vector<Rational> rationalize(const std::vector<Real>& x, const Integer& bound) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(rationalize(to_rational(v), bound));
  return out;
}

Rational rayleigh_quotient(const RatMatrix& M1, const RatMatrix& M2, const std::vector<Rational>& a) {
  Rational q1 = quadratic_form(M1, a);
  if (q1 <= 0) throw std::domain_error("a^T M1 a is not positive");
  return quadratic_form(M2, a) / q1;
}

Rational round_down_strict(const Rational& q, unsigned digits) {
  Integer den = pow10(digits);
  Rational c = floor_to_denominator(q, den);
  if (c == q) c -= Rational(1, den);
  return c;
}

BoundCertificate find_certificate(const Variant& v, unsigned d, bool full, const RatMatrix& M1,
                                  const RatMatrix& M2, const CertifyOptions& opt) {
  auto n = static_cast<unsigned>(M1.size());
  unsigned digits = opt.digits ? opt.digits : std::max(50u, 40 + 6 * n);
  auto eig = solve_generalized(M1, M2, opt.tol, digits);

  std::vector<Real> a = eig.vector;
  Real top = 0;
  for (const auto& x : a) top = std::max(top, Real(abs(x)));
  for (auto& x : a) x /= top;

  Rational lambda = to_rational(eig.value);
  unsigned close = std::min(opt.c_digits, digits / 2);
  Rational good = lambda * (1 - Rational(1, pow10(close)));
  std::optional<std::vector<Rational>> best;
  Rational best_q;
  for (unsigned e = 6; e + 5 <= digits; e += 3) {
    auto cand = rationalize(a, pow10(e));
    if (std::all_of(cand.begin(), cand.end(), [](const Rational& x) { return x == 0; })) continue;
    Rational q;
    try {
      q = rayleigh_quotient(M1, M2, cand);
    } catch (const std::domain_error&) {
      continue;
    }
    if (!best || q > best_q) {
      best = cand;
      best_q = q;
    }
    if (q >= good) break;
  }
  if (!best) throw std::runtime_error("no rational approximation gives a positive definite form");

  BoundCertificate c;
  c.variant = v;
  c.d = d;
  c.full_signatures = full;
  c.a = std::move(*best);
  c.C = round_down_strict(best_q, opt.c_digits);
  c.verified = check_quadratic_forms(M1, M2, c.a, c.C);
  return c;
}

BoundCertificate find_certificate(const GramPair& g, const CertifyOptions& opt) {
  return find_certificate(g.variant, g.d, g.full_signatures, g.M1, g.M2, opt);
}

void write_certificate(std::ostream& out, const BoundCertificate& c) {
  out << "variant = " << c.variant.name() << '\n';
  out << "k = " << c.variant.k << '\n';
  out << "d = " << c.d << '\n';
  if (c.variant.kind == VariantKind::eps) out << "eps = " << to_string(c.variant.eps) << '\n';
  if (c.variant.kind != VariantKind::krylov) {
    out << "signatures = " << (c.full_signatures ? "full" : "even") << '\n';
  }
  out << "C = " << to_string(c.C) << '\n';
  for (std::size_t i = 0; i < c.a.size(); ++i) out << "a[" << i << "] = " << to_string(c.a[i]) << '\n';
}

BoundCertificate read_certificate(std::istream& in) {
  BoundCertificate c;
  std::map<std::size_t, Rational> coeffs;
  bool have_variant = false, have_k = false, have_d = false, have_c = false;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("certificate line without '=': " + line);
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key == "variant") {
      if (value == "plain") {
        c.variant.kind = VariantKind::plain;
      } else if (value == "eps") {
        c.variant.kind = VariantKind::eps;
      } else if (value == "krylov") {
        c.variant.kind = VariantKind::krylov;
      } else {
        throw std::invalid_argument("unknown variant: " + value);
      }
      have_variant = true;
    } else if (key == "k") {
      c.variant.k = parse_unsigned(value);
      have_k = true;
    } else if (key == "d") {
      c.d = parse_unsigned(value);
      have_d = true;
    } else if (key == "eps") {
      c.variant.eps = parse_rational(value);
    } else if (key == "signatures") {
      if (value != "even" && value != "full") throw std::invalid_argument("signatures must be even or full");
      c.full_signatures = value == "full";
    } else if (key == "C") {
      c.C = parse_rational(value);
      have_c = true;
    } else if (key.starts_with("a[") && key.ends_with("]")) {
      auto idx = parse_unsigned(key.substr(2, key.size() - 3));
      if (!coeffs.emplace(idx, parse_rational(value)).second) {
        throw std::invalid_argument("duplicate coefficient " + key);
      }
    } else {
      throw std::invalid_argument("unknown certificate key: " + key);
    }
  }
  if (!have_variant || !have_k || !have_d || !have_c) {
    throw std::invalid_argument("certificate is missing variant, k, d or C");
  }
  if (c.variant.kind == VariantKind::eps && c.variant.eps == 0) {
    throw std::invalid_argument("eps certificate without eps");
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto it = coeffs.find(i);
    if (it == coeffs.end()) throw std::invalid_argument("coefficient a[" + std::to_string(i) + "] missing");
    c.a.push_back(it->second);
  }
  return c;
}

BoundCertificate load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_certificate(in);
}

BoundCertificate verify_certificate(const BoundCertificate& c, unsigned threads) {
  GramPair g;
  switch (c.variant.kind) {
    case VariantKind::plain: g = assemble_plain(c.variant.k, c.d, c.full_signatures, threads); break;
    case VariantKind::eps: g = assemble_eps(c.variant.k, c.d, c.variant.eps, c.full_signatures, threads); break;
    case VariantKind::krylov: g = hankel_pair(krylov_moments(c.variant.k, c.d), c.d); break;
  }
  BoundCertificate out = c;
  out.verified = g.M1.size() == c.a.size() && check_quadratic_forms(g.M1, g.M2, c.a, c.C);
  return out;
}

}  // namespace bgaps::varprob
