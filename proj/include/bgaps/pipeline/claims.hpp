#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgaps/admissible/tuple.hpp"
#include "bgaps/bounds/asymptotic.hpp"
#include "bgaps/cutoff3d/cutoff.hpp"
#include "bgaps/pipeline/hypothesis.hpp"
#include "bgaps/varprob/certificate.hpp"

namespace bgaps::pipeline {

struct ClaimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A lower bound that has passed exact verification; only the factories build one.
class CertifiedBound {
 public:
  // Throws ClaimError unless c.verified.
  static CertifiedBound from_certificate(const varprob::BoundCertificate& c, std::string artifact_hash = {});
  // The lower bound rounded down to `digits` decimals; records a rational T' >= T.
  static CertifiedBound from_asymptotic(const bounds::AsymptoticReport& r, unsigned digits = 12);
  // J/I of an exactly verified cutoff; marginal_verified mirrors the report.
  static CertifiedBound from_cutoff(const cutoff3d::PieceReport& r);
  // An externally supplied constant, kept under the given label.
  static CertifiedBound constant(const Rational& value, std::string label);

  const Rational& value() const { return value_; }
  const std::string& source() const { return source_; }
  const std::string& hash() const { return hash_; }
  const std::optional<Rational>& truncation() const { return truncation_; }
  bool marginal_verified() const { return marginal_verified_; }

 private:
  CertifiedBound(Rational v, std::string source) : value_(std::move(v)), source_(std::move(source)) {}

  Rational value_;
  std::string source_;
  std::string hash_;
  std::optional<Rational> truncation_;
  bool marginal_verified_ = false;
};

enum class DhlRule { mk, trunc, eps, marginal };
std::string to_string(DhlRule r);
DhlRule parse_dhl_rule(std::string_view name);

// lhs < rhs, or lhs <= rhs when !strict.
struct SideCondition {
  std::string name;
  Rational lhs, rhs;
  bool strict = true;

  bool holds() const { return strict ? lhs < rhs : lhs <= rhs; }
};

// DHL[k, m+1].
struct DHLClaim {
  std::uint64_t k = 0;
  unsigned m = 0;
  DhlRule rule = DhlRule::mk;
  Hypothesis hyp;
  Rational eps = 0;
  Rational C;
  Rational threshold;
  std::string source;
  std::string source_hash;
  std::vector<SideCondition> sides;

  Rational margin() const { return C - threshold; }
  std::string name() const;
};

struct HmClaim {
  unsigned m = 0;
  std::int64_t bound = 0;
  admissible::Tuple tuple;
  std::string tuple_hash;
  DHLClaim dhl;
};

struct ChainOptions {
  bool non_strict = false;  // side conditions of the eps rule become non-strict
};

DHLClaim dhl_from_mk(std::uint64_t k, const CertifiedBound& C, const Hypothesis& hyp, unsigned m);
DHLClaim dhl_from_trunc(std::uint64_t k, const CertifiedBound& C, const Rational& varpi, const Rational& delta,
                        unsigned m);
DHLClaim dhl_from_eps(std::uint64_t k, const Rational& eps, const CertifiedBound& C, const Hypothesis& hyp, unsigned m,
                      const ChainOptions& opt = {});
DHLClaim dhl_from_marginal(std::uint64_t k, const Rational& eps, const CertifiedBound& ratio, const Hypothesis& hyp,
                           unsigned m);

HmClaim hm_from_dhl(const DHLClaim& d, const admissible::Tuple& t, std::string tuple_hash = {});

// varpi just above m/C - 1/4 and delta = T'(1/4 + varpi) rounded up, on a 10^-digits grid.
struct TruncParameters {
  Rational varpi, delta;
};
TruncParameters trunc_parameters(const CertifiedBound& C, unsigned m, unsigned digits = 12);

// Recomputes threshold, side conditions and the main inequality from the stored fields.
std::vector<std::string> audit(const DHLClaim& d);
std::vector<std::string> audit(const HmClaim& h);

}  // namespace bgaps::pipeline
