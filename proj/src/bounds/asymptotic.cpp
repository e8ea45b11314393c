#include "bgaps/bounds/asymptotic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/expm1.hpp>
#include <limits>
#include <stdexcept>

namespace bgaps::bounds {

namespace {

struct Quad {
  Real value;
  Real error;
};

template <class F>
Quad gk(F f, const Real& a, const Real& b) {
  Real err;
  Real tol = Real("1e-30");
  Real v = boost::math::quadrature::gauss_kronrod<Real, 61>::integrate(f, a, b, 25, tol, &err);
  return {v, err};
}

// Endpoint singularities (log t near 0) are handled by the double-exponential rule.
template <class F>
Quad ts(F f, const Real& a, const Real& b) {
  boost::math::quadrature::tanh_sinh<Real> rule(15);
  Real err;
  Real v = rule.integrate(f, a, b, Real("1e-30"), &err);
  return {v, err};
}

// int_0^T h(t) g(t)^2 dt after t = c (e^v - 1) / (k - 1); g^2 is sharply peaked at 0 for
// large k and becomes e^{-2v} / c^2 in the new variable.
template <class Rule, class H>
Quad g2_integral(Rule rule, const AsymptoticParams& p, H h) {
  Real b = Real(p.k) - 1;
  Real vmax = log1p(b * p.T / p.c);
  auto q = rule(
      [&](const Real& v) {
        Real ev = exp(v);
        return Real(h(p.c * boost::math::expm1(v) / b) / ev);
      },
      Real(0), vmax);
  Real scale = 1 / (p.c * b);
  return {q.value * scale, q.error * scale};
}

Real slack() { return std::numeric_limits<Real>::epsilon() * 1000; }

}  // namespace

AsymptoticParams table_params(std::uint64_t k, const Real& theta, const Real& beta, const std::optional<Real>& tau) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  AsymptoticParams p;
  p.k = k;
  Real lk = log(Real(k));
  p.c = theta / lk;
  p.T = beta / lk;
  if (tau) {
    p.tau = *tau;
  } else {
    p.tau = 1 - Real(k) * g_moments(p).mu;
  }
  return p;
}

GMoments g_moments(const AsymptoticParams& p) {
  Real a = p.c;
  Real b = Real(p.k) - 1;
  Real end = a + b * p.T;
  Real lg = log(end / a);
  Real m2 = (1 / a - 1 / end) / b;
  Real first = (lg / b - a * m2) / b;
  Real second = (p.T - 2 * a / b * lg + a * a * m2) / (b * b);
  GMoments g;
  g.m2 = m2;
  g.mu = first / m2;
  g.sigma2 = second / m2 - g.mu * g.mu;
  return g;
}

GMoments g_moments_quadrature(const AsymptoticParams& p) {
  auto rule = [](auto f, const Real& a, const Real& b) { return gk(f, a, b); };
  Real m2 = g2_integral(rule, p, [](const Real&) { return Real(1); }).value;
  Real first = g2_integral(rule, p, [](const Real& t) { return t; }).value;
  Real second = g2_integral(rule, p, [](const Real& t) { return Real(t * t); }).value;
  GMoments g;
  g.m2 = m2;
  g.mu = first / m2;
  g.sigma2 = second / m2 - g.mu * g.mu;
  return g;
}

void check_conditions(const AsymptoticParams& p, const GMoments& g) {
  if (p.c <= 0 || p.T <= 0 || p.tau <= 0) throw std::domain_error("c, T and tau must be positive");
  Real kmu = Real(p.k) * g.mu;
  if (kmu > 1 - p.tau + slack()) throw std::domain_error("condition (tau-bound) violated: k mu <= 1 - tau");
  if (kmu >= 1 - p.T) throw std::domain_error("condition (T-bound) violated: k mu < 1 - T");
  Real gap = 1 + p.tau - kmu;
  if (Real(p.k) * g.sigma2 >= gap * gap) {
    throw std::domain_error("condition (ksb) violated: k sigma^2 < (1 + tau - k mu)^2");
  }
}

AsymptoticReport asymptotic_lower(const AsymptoticParams& p) {
  auto g = g_moments(p);
  check_conditions(p, g);
  const Real k = Real(p.k);
  const Real b = k - 1;
  const Real kmu = k * g.mu;
  auto gk_rule = [](auto f, const Real& lo, const Real& hi) { return gk(f, lo, hi); };
  auto ts_rule = [](auto f, const Real& lo, const Real& hi) { return ts(f, lo, hi); };

  AsymptoticReport r;
  r.params = p;
  r.m2 = g.m2;
  r.mu = g.mu;
  r.sigma2 = g.sigma2;

  auto z = gk(
      [&](const Real& x) {
        Real L = log((x - kmu) / p.T);
        Real s = x - kmu;
        return Real(x * (L + k * g.sigma2 / (4 * s * s * L)) + x * x / (4 * k * p.T));
      },
      1, 1 + p.tau);
  auto z3 = g2_integral(gk_rule, p, [&](const Real& t) { return Real(k * t * log1p(t / p.T)); });
  auto w = g2_integral(ts_rule, p, [&](const Real& t) { return Real(log1p(p.tau / (k * t))); });
  auto v = g2_integral(gk_rule, p, [&](const Real& t) { return Real(1 / (2 * p.c + b * t)); });

  r.Z = z.value / p.tau;
  r.Z3 = z3.value / g.m2;
  r.W = w.value / g.m2;
  r.X = log(k) / p.tau * p.c * p.c;
  r.V = p.c / g.m2 * v.value;
  Real A = 1 - b * g.mu - p.c;
  r.U = log(k) / p.c * (A * A + A * p.tau + p.tau * p.tau / 3 + b * g.sigma2);

  Real num = r.Z + r.Z3 + r.W * r.X + r.V * r.U;
  Real gap = 1 + p.tau - kmu;
  Real den = (1 + p.tau / 2) * (1 - k * g.sigma2 / (gap * gap));
  Real scale = k / b / den;
  Real err = z.error / p.tau + z3.error / g.m2 + r.X * w.error / g.m2 + r.U * p.c / g.m2 * v.error;
  r.error_budget = scale * err + slack();
  r.lower_bound = k / b * log(k) - scale * num - r.error_budget;
  return r;
}

}  // namespace bgaps::bounds
