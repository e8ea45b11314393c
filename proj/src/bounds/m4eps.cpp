#include "bgaps/bounds/m4eps.hpp"

#include <stdexcept>
#include <vector>

namespace bgaps::bounds {

namespace {

using Poly = std::vector<Rational>;  // coefficients in increasing degree

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Rational integrate(const Poly& p, const Rational& lo, const Rational& hi) {
  Rational total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto e = static_cast<unsigned>(i + 1);
    total += p[i] * (pow(hi, e) - pow(lo, e)) / Rational(e);
  }
  return total;
}

}  // namespace

Rational m4eps_I_closed_form(const Rational& eps, const Rational& alpha) {
  Rational s = 1 + eps;
  return alpha * alpha * pow(s, 6) / 36 - alpha * pow(s, 5) / 15 + pow(s, 4) / 24;
}

M4EpsResult m4eps_check(const Rational& eps, const Rational& alpha) {
  if (eps <= 0 || eps * 2 >= 1) throw std::invalid_argument("eps must lie in (0, 1/2)");
  M4EpsResult r;
  Rational s = 1 + eps;

  // I = int_0^{1+eps} (1 - alpha s)^2 s^3 / 3! ds
  Poly lin{1, -alpha};
  Poly cube{0, 0, 0, Rational(1, 6)};
  r.I = integrate(lin * lin * cube, 0, s);

  // J = int_0^{1-eps} (1+eps-u)^2 (1 - alpha (1+eps+u)/2)^2 u^2 / 2 du
  Poly outer{s, -1};
  Poly inner{1 - alpha * s / 2, -alpha / 2};
  Poly weight{0, 0, Rational(1, 2)};
  r.J = integrate(outer * outer * inner * inner * weight, 0, 1 - eps);

  r.ratio_ok = 4 * r.J > Rational(200558, 100000) * r.I;
  return r;
}

}  // namespace bgaps::bounds
