#pragma once

#include <vector>

#include "bgaps/common/rational.hpp"
#include "bgaps/varprob/certificate.hpp"
#include "bgaps/varprob/gram.hpp"

namespace bgaps::varprob {

struct KrylovTable {
  unsigned k = 0;
  std::vector<Rational> moments;  // <L^i 1, 1> for i = 0 .. 2n-1
};

KrylovTable krylov_moments(unsigned k, unsigned n);

// Hankel pair M1 = (m_{i+j}), M2 = (m_{i+j+1}), 0-based, of size n.
GramPair hankel_pair(const KrylovTable& t, unsigned n);

BoundCertificate krylov_lower_bound(unsigned k, unsigned n, double tol = 1e-10);

}  // namespace bgaps::varprob
