#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bgaps/common/rational.hpp"
#include "bgaps/varprob/gram.hpp"
#include "bgaps/varprob/solver.hpp"

namespace bgaps::varprob {

struct BoundCertificate {
  Variant variant;
  unsigned d = 0;  // basis degree; the Krylov dimension n for the krylov variant
  bool full_signatures = false;
  std::vector<Rational> a;
  Rational C;
  bool verified = false;
};

// Exact check of a^T M2 a - C a^T M1 a > 0 and a^T M1 a > 0; never throws on failure.
bool check_quadratic_forms(const RatMatrix& M1, const RatMatrix& M2, const std::vector<Rational>& a,
                           const Rational& C);
BoundCertificate certify(const GramPair& g, const std::vector<Rational>& a, const Rational& C);

// Closest rational with denominator <= bound (continued fractions, including the
// final semiconvergent), computed on the exact value of x.
Rational rationalize(const Rational& x, const Integer& bound);
std::vector<Rational> rationalize(const std::vector<Real>& x, const Integer& bound);

// Exact Rayleigh quotient a^T M2 a / a^T M1 a.
Rational rayleigh_quotient(const RatMatrix& M1, const RatMatrix& M2, const std::vector<Rational>& a);

// Largest rational with denominator 10^digits strictly below q.
Rational round_down_strict(const Rational& q, unsigned digits);

struct CertifyOptions {
  double tol = 1e-10;
  unsigned digits = 0;          // working precision; 0 picks one from the matrix size
  unsigned c_digits = 30;       // decimal granularity of the emitted C
};

// Solve, rationalize over the ladder 10^6, 10^9, ..., and certify the exact Rayleigh
// quotient rounded down. Throws if no rung yields a positive-definite quadratic form.
BoundCertificate find_certificate(const GramPair& g, const CertifyOptions& opt = {});
BoundCertificate find_certificate(const Variant& v, unsigned d, bool full, const RatMatrix& M1,
                                  const RatMatrix& M2, const CertifyOptions& opt = {});

void write_certificate(std::ostream& out, const BoundCertificate& c);
BoundCertificate read_certificate(std::istream& in);
BoundCertificate load_certificate(const std::filesystem::path& path);

// Rebuilds the matrices named by the certificate and checks it exactly; returns the
// certificate with `verified` recomputed.
BoundCertificate verify_certificate(const BoundCertificate& c, unsigned threads = 1);

}  // namespace bgaps::varprob
