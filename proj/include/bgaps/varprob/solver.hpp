#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

#include "bgaps/varprob/gram.hpp"

namespace bgaps::varprob {

using Real = boost::multiprecision::mpfr_float;

struct Eigenpair {
  Real value;
  std::vector<Real> vector;  // generalized eigenvector a with M2 a = value * M1 a
  unsigned iterations = 0;
  Real residual;             // relative residual of the reduced problem
};

Real to_real(const Rational& q);
// Exact value of the binary floating-point number x.
Rational to_rational(const Real& x);

// Largest generalized eigenpair of (M2, M1): M1 = L L^T, power iteration on
// L^{-1} M2 L^{-T}, then Rayleigh-quotient refinement. Works at `digits` decimal
// digits. Throws std::domain_error("M1 not positive definite") or
// std::runtime_error("iteration did not converge within budget").
Eigenpair solve_generalized(const RatMatrix& M1, const RatMatrix& M2, double tol = 1e-10, unsigned digits = 50);

}  // namespace bgaps::varprob
