#include "bgaps/bounds/closed_forms.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bgaps::bounds {

namespace {

void require_k(unsigned k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

}  // namespace

Real mk_upper(unsigned k) {
  require_k(k);
  Real kk = k;
  return kk / (kk - 1) * log(kk);
}

// Principal branch of w e^w = x for x > 0, by Newton from log(1 + x).
Real lambert_w(const Real& x) {
  if (x <= 0) throw std::invalid_argument("lambert_w needs x > 0");
  Real w = log1p(x);
  for (int i = 0; i < 200; ++i) {
    Real ew = exp(w);
    Real step = (w * ew - x) / (ew * (w + 1));
    w -= step;
    if (abs(step) <= abs(w) * std::numeric_limits<Real>::epsilon()) break;
  }
  return w;
}

Real m2_exact() { return 1 / (1 - lambert_w(1 / boost::math::constants::e<Real>())); }

Real m2_eps_residual(const Real& lambda, const Real& eps) {
  Real a = lambda - 1 + eps;
  Real b = lambda - 2 * eps;
  Real den = 2 * lambda - 1 - eps;
  Real c1 = a * (log(b) - log(a)) / den + 1;
  return c1 * (log(a) - log(lambda - 1 - eps)) - 1 - b * (log(a) - log(b)) / den;
}

Real m2_eps(const Real& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
  const Real e = boost::math::constants::e<Real>();
  if (eps * 3 >= 1) return (e * (1 + eps) - 2 * eps) / (e - 1);

  Real lo = m2_exact();
  Real hi = 2;
  auto f = [&](const Real& x) { return m2_eps_residual(x, eps); };
  std::uintmax_t iters = 400;
  auto tol = boost::math::tools::eps_tolerance<Real>(std::numeric_limits<Real>::digits - 6);
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
  return (a + b) / 2;
}

Real mkeps_upper(unsigned k, const Real& eps, const Real& a) {
  require_k(k);
  if (eps < 0 || eps >= 1) throw std::invalid_argument("eps must lie in [0, 1)");
  if (a * (1 + eps) <= 1 || a * (1 - eps) >= 1) {
    throw std::invalid_argument("a must lie strictly between 1/(1+eps) and 1/(1-eps)");
  }
  Real kk = k;
  return kk / (a * (kk - 1)) * log(kk + (a * (1 + eps) - 1) * (kk - 1) / (1 - a * (1 - eps)));
}

Real bessel_first_zero(unsigned nu) { return boost::math::cyl_bessel_j_zero(Real(nu), 1); }

Real bessel_lower(unsigned k) {
  require_k(k);
  Real j = bessel_first_zero(k - 2);
  return Real(4) * k * (k - 1) / (j * j);
}

}  // namespace bgaps::bounds
