#pragma once

#include "bgaps/common/rational.hpp"

namespace bgaps::bounds {

// F = (1 - alpha (t1 + t2 + t3 + t4)) on (1 + eps) R_4.
struct M4EpsResult {
  Rational I;
  Rational J;  // J_{1, 1 - eps}(F)
  bool ratio_ok = false;  // 4 J / I > 2.00558
};

M4EpsResult m4eps_check(const Rational& eps, const Rational& alpha);

// alpha^2 (1+eps)^6 / 36 - alpha (1+eps)^5 / 15 + (1+eps)^4 / 24.
Rational m4eps_I_closed_form(const Rational& eps, const Rational& alpha);

}  // namespace bgaps::bounds
