#include "bgaps/varprob/gram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "bgaps/symmpoly/algebra.hpp"

namespace bgaps::varprob {

using symmpoly::Algebra;
using symmpoly::factorial;
using symmpoly::integrate_monomial;

namespace {

// sum over e of (base - S)^e * poly_e, polynomials in k - 1 variables.
using AffineExpansion = std::map<unsigned, std::map<Signature, Rational>>;

void add(AffineExpansion& x, unsigned e, const Signature& beta, const Rational& c) {
  if (c == 0) return;
  auto& slot = x[e][beta];
  slot += c;
}

// Integral over t_k in [0, base - S] of (base - S - t_k)^a P_alpha(t), written in powers
// of (base - S): t_k^v pairs with P_{alpha \ v} and integrates to a! v! / (a+v+1)!.
AffineExpansion fibre_integral(const BasisElement& b, unsigned k) {
  AffineExpansion out;
  auto values = b.alpha.distinct();
  if (b.alpha.length() < k) values.push_back(0);
  for (auto v : values) {
    Rational w(factorial(b.a) * factorial(v), factorial(b.a + v + 1));
    w.canonicalize();
    add(out, b.a + v + 1, b.alpha.without(v), w);
  }
  return out;
}

// Rewrite powers of (1 + eps - S) as powers of (1 - eps - S): (2 eps + (1 - eps - S))^e.
AffineExpansion rebase(const AffineExpansion& x, const Rational& eps) {
  AffineExpansion out;
  Rational two_eps = 2 * eps;
  for (const auto& [e, poly] : x) {
    Integer binom = 1;
    for (unsigned j = 0; j <= e; ++j) {
      Rational w = binom * pow(two_eps, e - j);
      for (const auto& [beta, c] : poly) add(out, j, beta, c * w);
      binom = binom * (e - j) / (j + 1);
    }
  }
  return out;
}

template <class Entry>
void fill_symmetric(RatMatrix& m, std::size_t n, unsigned threads, Entry&& entry) {
  m.assign(n, std::vector<Rational>(n));
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t c = first; c < cells.size(); c += step) {
      auto [i, j] = cells[c];
      m[i][j] = entry(i, j);
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t, threads);
  work(0, threads);
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m[i][j] = m[j][i];
  }
}

// Integral over R_k of (1 - P_(1))^{a_i + a_j} P_{alpha_i} P_{alpha_j}.
Rational plain_m1_entry(const Algebra& alg, const BasisElement& x, const BasisElement& y) {
  Rational total = 0;
  for (const auto& [gamma, c] : alg.structure_constants(x.alpha, y.alpha)) {
    total += c * integrate_monomial(gamma, alg.k(), x.a + y.a);
  }
  return total;
}

// Integral over scale * R_{k-1} of the product of two expansions in powers of (scale - S).
Rational pair_integral(const Algebra& alg, const AffineExpansion& x, const AffineExpansion& y,
                       const Rational& scale) {
  unsigned n = alg.k();
  Rational total = 0;
  for (const auto& [e1, p1] : x) {
    for (const auto& [e2, p2] : y) {
      for (const auto& [b1, c1] : p1) {
        for (const auto& [b2, c2] : p2) {
          Rational cc = c1 * c2;
          for (const auto& [gamma, c] : alg.structure_constants(b1, b2)) {
            Rational term = cc * c * integrate_monomial(gamma, n, e1 + e2);
            if (scale != 1) term *= pow(scale, e1 + e2 + gamma.degree() + n);
            total += term;
          }
        }
      }
    }
  }
  return total;
}

RatMatrix submatrix(const RatMatrix& m, const std::vector<std::size_t>& keep) {
  RatMatrix out(keep.size(), std::vector<Rational>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out[i][j] = m[keep[i]][keep[j]];
  }
  return out;
}

void prune(GramPair& g) {
  auto keep = independent_prefix(g.M1);
  if (keep.size() == g.basis.size()) return;
  std::vector<BasisElement> basis;
  for (auto i : keep) basis.push_back(g.basis[i]);
  g.basis = std::move(basis);
  g.M1 = submatrix(g.M1, keep);
}

void require(unsigned k) {
  if (k < 2) throw std::invalid_argument("variational problems need k >= 2");
}

}  // namespace

std::string Variant::name() const {
  switch (kind) {
    case VariantKind::plain: return "plain";
    case VariantKind::eps: return "eps";
    case VariantKind::krylov: return "krylov";
  }
  return "?";
}

std::vector<BasisElement> make_basis(unsigned k, unsigned d, bool full_signatures, const Rational& offset) {
  std::vector<BasisElement> out;
  auto sigs = symmpoly::signatures_up_to(d, k, !full_signatures);
  std::erase_if(sigs, [](const Signature& s) { return s.has_part(1); });
  for (unsigned total = 0; total <= d; ++total) {
    for (const auto& alpha : sigs) {
      if (alpha.degree() > total) continue;
      out.push_back(BasisElement{total - alpha.degree(), alpha, offset});
    }
  }
  return out;
}

GramPair assemble_plain(unsigned k, unsigned d, bool full_signatures, unsigned threads) {
  require(k);
  GramPair g;
  g.variant = Variant{VariantKind::plain, k, 0};
  g.d = d;
  g.full_signatures = full_signatures;
  g.basis = make_basis(k, d, full_signatures);
  std::size_t n = g.basis.size();

  Algebra alg_k(k, 2 * d);
  fill_symmetric(g.M1, n, threads, [&](std::size_t i, std::size_t j) -> Rational {
    return plain_m1_entry(alg_k, g.basis[i], g.basis[j]);
  });
  prune(g);
  n = g.basis.size();

  Algebra alg_km1(k - 1, 2 * d);
  std::vector<AffineExpansion> fib;
  for (const auto& b : g.basis) fib.push_back(fibre_integral(b, k));
  fill_symmetric(g.M2, n, threads, [&](std::size_t i, std::size_t j) -> Rational {
    return Rational(k) * pair_integral(alg_km1, fib[i], fib[j], 1);
  });
  return g;
}

GramPair assemble_eps(unsigned k, unsigned d, const Rational& eps, bool full_signatures, unsigned threads) {
  require(k);
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");
  GramPair g;
  g.variant = Variant{VariantKind::eps, k, eps};
  g.d = d;
  g.full_signatures = full_signatures;
  Rational up = 1 + eps;
  Rational down = 1 - eps;
  g.basis = make_basis(k, d, full_signatures, up);
  std::size_t n = g.basis.size();

  Algebra alg_k(k, 2 * d);
  fill_symmetric(g.M1, n, threads, [&](std::size_t i, std::size_t j) -> Rational {
    const auto& x = g.basis[i];
    const auto& y = g.basis[j];
    return pow(up, x.degree() + y.degree() + k) * plain_m1_entry(alg_k, x, y);
  });
  prune(g);
  n = g.basis.size();

  Algebra alg_km1(k - 1, 2 * d);
  std::vector<AffineExpansion> fib;
  for (const auto& b : g.basis) fib.push_back(rebase(fibre_integral(b, k), eps));
  fill_symmetric(g.M2, n, threads, [&](std::size_t i, std::size_t j) -> Rational {
    return Rational(k) * pair_integral(alg_km1, fib[i], fib[j], down);
  });
  return g;
}

std::vector<std::size_t> independent_prefix(const RatMatrix& m) {
  std::vector<std::size_t> keep;
  std::vector<std::vector<Rational>> L;  // unit lower rows over kept columns
  std::vector<Rational> D;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<Rational> row(keep.size());
    Rational pivot = m[i][i];
    for (std::size_t j = 0; j < keep.size(); ++j) {
      Rational v = m[i][keep[j]];
      for (std::size_t t = 0; t < j; ++t) v -= row[t] * L[j][t] * D[t];
      row[j] = v / D[j];
      pivot -= row[j] * row[j] * D[j];
    }
    if (pivot == 0) continue;
    keep.push_back(i);
    L.push_back(std::move(row));
    D.push_back(pivot);
  }
  return keep;
}

bool is_symmetric(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) return false;
    }
  }
  return true;
}

bool is_positive_definite(const RatMatrix& m) {
  auto a = m;
  auto n = a.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (a[p][p] <= 0) return false;
    for (std::size_t i = p + 1; i < n; ++i) {
      if (a[i][p] == 0) continue;
      Rational f = a[i][p] / a[p][p];
      for (std::size_t j = p; j < n; ++j) a[i][j] -= f * a[p][j];
    }
  }
  return true;
}

}  // namespace bgaps::varprob
