#include "bgaps/varprob/krylov.hpp"

#include <stdexcept>

#include "bgaps/symmpoly/algebra.hpp"

namespace bgaps::varprob {

KrylovTable krylov_moments(unsigned k, unsigned n) {
  if (k < 2 || n < 1) throw std::invalid_argument("krylov_moments needs k >= 2 and n >= 1");
  symmpoly::Algebra alg(k, 2 * n);
  KrylovTable t;
  t.k = k;
  auto f = alg.one();
  for (unsigned i = 0; i < 2 * n; ++i) {
    t.moments.push_back(alg.integrate(f));
    if (i + 1 < 2 * n) f = alg.apply_L(f);
  }
  return t;
}

GramPair hankel_pair(const KrylovTable& t, unsigned n) {
  if (t.moments.size() < 2 * static_cast<std::size_t>(n)) throw std::invalid_argument("not enough moments");
  GramPair g;
  g.variant = Variant{VariantKind::krylov, t.k, 0};
  g.d = n;
  g.M1.assign(n, std::vector<Rational>(n));
  g.M2.assign(n, std::vector<Rational>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      g.M1[i][j] = t.moments[i + j];
      g.M2[i][j] = t.moments[i + j + 1];
    }
  }
  return g;
}

BoundCertificate krylov_lower_bound(unsigned k, unsigned n, double tol) {
  auto g = hankel_pair(krylov_moments(k, n), n);
  CertifyOptions opt;
  opt.tol = tol;
  return find_certificate(g, opt);
}

}  // namespace bgaps::varprob
