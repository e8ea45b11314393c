#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace bgaps::bounds {

using Real = boost::multiprecision::cpp_bin_float_50;

// (k / (k - 1)) log k, the Cauchy-Schwarz upper bound on M_k.
Real mk_upper(unsigned k);

Real lambert_w(const Real& x);

// 1 / (1 - W(1/e)).
Real m2_exact();

// Exact value of the enlarged two-dimensional problem for 0 < eps < 1. The closed
// form holds on [1/3, 1); below 1/3 the value is the root in (1 + eps, 2) of the
// matching condition for the piecewise eigenfunction.
Real m2_eps(const Real& eps);
// Residual of that matching condition; zero exactly at m2_eps(eps) for eps < 1/3.
Real m2_eps_residual(const Real& lambda, const Real& eps);

// (k / (a (k - 1))) log(k + (a (1 + eps) - 1)(k - 1) / (1 - a (1 - eps))), valid for
// 1/(1+eps) < a < 1/(1-eps). a = 1 gives (k / (k - 1)) log(2k - 1).
Real mkeps_upper(unsigned k, const Real& eps, const Real& a = 1);

// First positive zero of J_nu.
Real bessel_first_zero(unsigned nu);
// 4 k (k - 1) / j_{k-2}^2.
Real bessel_lower(unsigned k);

}  // namespace bgaps::bounds
