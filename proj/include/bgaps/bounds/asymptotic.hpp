#pragma once

#include <cstdint>
#include <optional>

#include "bgaps/bounds/closed_forms.hpp"

namespace bgaps::bounds {

struct AsymptoticParams {
  std::uint64_t k = 2;
  Real c;
  Real T;
  Real tau;
};

struct AsymptoticReport {
  AsymptoticParams params;
  Real m2, mu, sigma2;
  Real Z, Z3, W, X, V, U;
  Real error_budget;  // absolute quadrature error already subtracted from lower_bound
  Real lower_bound;
};

// c = theta / log k, T = beta / log k, and tau = 1 - k mu unless given.
AsymptoticParams table_params(std::uint64_t k, const Real& theta, const Real& beta,
                              const std::optional<Real>& tau = std::nullopt);

// m2, mu, sigma^2 of g(t) = 1 / (c + (k-1) t) on [0, T], in closed form.
struct GMoments {
  Real m2, mu, sigma2;
};
GMoments g_moments(const AsymptoticParams& p);
GMoments g_moments_quadrature(const AsymptoticParams& p);

// Throws std::domain_error naming the first violated condition.
void check_conditions(const AsymptoticParams& p, const GMoments& g);

AsymptoticReport asymptotic_lower(const AsymptoticParams& p);

}  // namespace bgaps::bounds
