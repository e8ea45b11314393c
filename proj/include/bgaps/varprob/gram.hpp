#pragma once

#include <string>
#include <vector>

#include "bgaps/common/rational.hpp"
#include "bgaps/symmpoly/signature.hpp"

namespace bgaps::varprob {

using symmpoly::Signature;
using RatMatrix = std::vector<std::vector<Rational>>;

enum class VariantKind { plain, eps, krylov };

struct Variant {
  VariantKind kind = VariantKind::plain;
  unsigned k = 2;
  Rational eps = 0;  // eps variant only

  std::string name() const;
  bool operator==(const Variant&) const = default;
};

// (offset - P_(1))^a P_alpha with offset 1 (plain) or 1 + eps.
struct BasisElement {
  unsigned a = 0;
  Signature alpha;
  Rational offset = 1;

  unsigned degree() const { return a + alpha.degree(); }
  bool operator==(const BasisElement&) const = default;
};

struct GramPair {
  Variant variant;
  unsigned d = 0;
  bool full_signatures = false;
  std::vector<BasisElement> basis;
  RatMatrix M1;
  RatMatrix M2;

  std::size_t size() const { return basis.size(); }
};

// All (a, alpha) with alpha free of parts equal to 1 (even parts only unless full),
// length(alpha) <= k and a + deg(alpha) <= d, ordered by total degree so that a
// smaller d gives a prefix. For small k these are linearly dependent once d is
// large; the assemblers drop every element already in the span of earlier ones.
std::vector<BasisElement> make_basis(unsigned k, unsigned d, bool full_signatures, const Rational& offset = 1);

GramPair assemble_plain(unsigned k, unsigned d, bool full_signatures = false, unsigned threads = 1);
GramPair assemble_eps(unsigned k, unsigned d, const Rational& eps, bool full_signatures = false,
                      unsigned threads = 1);

// Indices of the elements kept by an exact incremental LDL pass over the Gram matrix m:
// element i is dropped when its pivot vanishes.
std::vector<std::size_t> independent_prefix(const RatMatrix& m);

bool is_symmetric(const RatMatrix& m);
// Exact test that every leading principal minor is positive (symmetric elimination).
bool is_positive_definite(const RatMatrix& m);

}  // namespace bgaps::varprob
