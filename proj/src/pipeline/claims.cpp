#include "bgaps/pipeline/claims.hpp"

#include "bgaps/admissible/admissibility.hpp"

namespace bgaps::pipeline {

namespace {

Rational rational_from_real(const bounds::Real& x, unsigned digits, bool up) {
  Integer scale = pow10(digits);
  bounds::Real scaled = x * bounds::Real(scale.get_str());
  bounds::Real r = up ? ceil(scaled) : floor(scaled);
  std::string digits_text = r.str(0, std::ios_base::fixed);
  digits_text = digits_text.substr(0, digits_text.find('.'));
  Rational q(Integer(digits_text), scale);
  q.canonicalize();
  return q;
}

Rational main_threshold(const DHLClaim& d) {
  if (d.rule == DhlRule::trunc) return Rational(d.m) / (Rational(1, 4) + d.hyp.varpi);
  return 2 * Rational(d.m) / d.hyp.theta;
}

std::vector<SideCondition> side_conditions(const DHLClaim& d, bool non_strict) {
  std::vector<SideCondition> out;
  const auto& h = d.hyp;
  switch (d.rule) {
    case DhlRule::mk:
      break;
    case DhlRule::trunc: {
      Rational quarter(1, 4);
      out.push_back({"0<varpi", 0, h.varpi});
      out.push_back({"varpi<1/4", h.varpi, quarter});
      out.push_back({"0<delta", 0, h.delta});
      out.push_back({"delta<1/2", h.delta, Rational(1, 2)});
      out.push_back({"600varpi+180delta<7", 600 * h.varpi + 180 * h.delta, 7});
      break;
    }
    case DhlRule::eps:
      if (h.is_eh_family()) {
        out.push_back({"1+eps<1/theta", 1 + d.eps, 1 / h.theta, !non_strict});
      } else {
        out.push_back({"eps<1/(k-1)", d.eps, Rational(1, d.k - 1), !non_strict});
      }
      break;
    case DhlRule::marginal:
      out.push_back({"eps<1/(k-1)", d.eps, Rational(1, d.k - 1)});
      break;
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ClaimError(what);
}

DHLClaim finish(DHLClaim d, const CertifiedBound& C, bool non_strict) {
  require(d.k >= d.m + 1 && d.m >= 1, "need k >= m+1 >= 2");
  d.C = C.value();
  d.source = C.source();
  d.source_hash = C.hash();
  d.sides = side_conditions(d, non_strict);
  for (const auto& s : d.sides) {
    require(s.holds(), "side condition " + s.name + " violated: " + bgaps::to_string(s.lhs) + " vs " +
                           bgaps::to_string(s.rhs));
  }
  d.threshold = main_threshold(d);
  require(d.C > d.threshold, "inequality not satisfied: C = " + bgaps::to_string(d.C) + ", threshold = " +
                                 bgaps::to_string(d.threshold) + ", margin = " + to_decimal(d.margin(), 12));
  return d;
}

}  // namespace

CertifiedBound CertifiedBound::from_certificate(const varprob::BoundCertificate& c, std::string artifact_hash) {
  require(c.verified, "certificate is not verified");
  CertifiedBound b(c.C, "certificate:" + c.variant.name() + ":d=" + std::to_string(c.d));
  b.hash_ = std::move(artifact_hash);
  return b;
}

CertifiedBound CertifiedBound::from_asymptotic(const bounds::AsymptoticReport& r, unsigned digits) {
  CertifiedBound b(rational_from_real(r.lower_bound, digits, false),
                   "asymptotic:k=" + std::to_string(r.params.k));
  b.truncation_ = rational_from_real(r.params.T, digits, true);
  return b;
}

CertifiedBound CertifiedBound::from_cutoff(const cutoff3d::PieceReport& r) {
  require(r.I > 0, "cutoff has I = 0");
  CertifiedBound b(r.J / r.I, "cutoff3d");
  b.marginal_verified_ = r.marginals_vanish;
  return b;
}

CertifiedBound CertifiedBound::constant(const Rational& value, std::string label) {
  return CertifiedBound(value, "constant:" + label);
}

std::string to_string(DhlRule r) {
  switch (r) {
    case DhlRule::mk:
      return "mk";
    case DhlRule::trunc:
      return "trunc";
    case DhlRule::eps:
      return "eps";
    case DhlRule::marginal:
      return "marginal";
  }
  return {};
}

DhlRule parse_dhl_rule(std::string_view name) {
  for (auto r : {DhlRule::mk, DhlRule::trunc, DhlRule::eps, DhlRule::marginal}) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown rule: " + std::string(name));
}

std::string DHLClaim::name() const { return "DHL[" + std::to_string(k) + "," + std::to_string(m + 1) + "]"; }

DHLClaim dhl_from_mk(std::uint64_t k, const CertifiedBound& C, const Hypothesis& hyp, unsigned m) {
  require(hyp.is_eh_family(), "mk rule needs EH or BV, got " + hyp.to_string());
  DHLClaim d;
  d.k = k;
  d.m = m;
  d.rule = DhlRule::mk;
  d.hyp = hyp;
  return finish(std::move(d), C, false);
}

DHLClaim dhl_from_trunc(std::uint64_t k, const CertifiedBound& C, const Rational& varpi, const Rational& delta,
                        unsigned m) {
  DHLClaim d;
  d.k = k;
  d.m = m;
  d.rule = DhlRule::trunc;
  d.hyp = Hypothesis::mpz(varpi, delta);
  if (C.truncation()) {
    Rational alpha = delta / (Rational(1, 4) + varpi);
    require(*C.truncation() <= alpha, "bound truncation " + to_decimal(*C.truncation(), 12) +
                                          " exceeds delta/(1/4+varpi) = " + to_decimal(alpha, 12));
  }
  return finish(std::move(d), C, false);
}

DHLClaim dhl_from_eps(std::uint64_t k, const Rational& eps, const CertifiedBound& C, const Hypothesis& hyp, unsigned m,
                      const ChainOptions& opt) {
  require(hyp.kind != HypothesisKind::MPZ, "eps rule needs EH or GEH, got " + hyp.to_string());
  require(eps >= 0, "eps must be non-negative");
  DHLClaim d;
  d.k = k;
  d.m = m;
  d.rule = DhlRule::eps;
  d.hyp = hyp;
  d.eps = eps;
  return finish(std::move(d), C, opt.non_strict);
}

DHLClaim dhl_from_marginal(std::uint64_t k, const Rational& eps, const CertifiedBound& ratio, const Hypothesis& hyp,
                           unsigned m) {
  require(ratio.marginal_verified(), "marginal verification missing");
  require(hyp.kind == HypothesisKind::GEH, "marginal rule needs GEH, got " + hyp.to_string());
  DHLClaim d;
  d.k = k;
  d.m = m;
  d.rule = DhlRule::marginal;
  d.hyp = hyp;
  d.eps = eps;
  return finish(std::move(d), ratio, false);
}

HmClaim hm_from_dhl(const DHLClaim& d, const admissible::Tuple& t, std::string tuple_hash) {
  require(t.size() == d.k, "size mismatch: tuple has " + std::to_string(t.size()) + " elements, claim needs " +
                               std::to_string(d.k));
  require(admissible::is_admissible(t), "tuple not admissible");
  return {d.m, t.diameter(), t, std::move(tuple_hash), d};
}

TruncParameters trunc_parameters(const CertifiedBound& C, unsigned m, unsigned digits) {
  require(C.truncation().has_value(), "bound carries no truncation");
  Integer scale = pow10(digits);
  Rational step(1, scale);
  Rational varpi = floor_to_denominator(Rational(m) / C.value() - Rational(1, 4), scale) + step;
  Rational delta = ceil_to_denominator(*C.truncation() * (Rational(1, 4) + varpi), scale);
  return {varpi, delta};
}

std::vector<std::string> audit(const DHLClaim& d) {
  std::vector<std::string> problems;
  if (!(d.k >= d.m + 1 && d.m >= 1)) problems.push_back(d.name() + ": need k >= m+1 >= 2");
  bool non_strict = d.rule == DhlRule::eps && !d.sides.empty() && !d.sides.front().strict;
  auto expected = side_conditions(d, non_strict);
  if (expected.size() != d.sides.size()) problems.push_back(d.name() + ": side conditions do not match the rule");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& s = expected[i];
    if (i < d.sides.size() && (d.sides[i].name != s.name || d.sides[i].lhs != s.lhs || d.sides[i].rhs != s.rhs)) {
      problems.push_back(d.name() + ": recorded " + s.name + " differs from recomputation");
    }
    if (!s.holds()) problems.push_back(d.name() + ": " + s.name + " fails");
  }
  if (d.threshold != main_threshold(d)) problems.push_back(d.name() + ": threshold differs from recomputation");
  if (!(d.C > main_threshold(d))) problems.push_back(d.name() + ": C does not exceed the threshold");
  return problems;
}

std::vector<std::string> audit(const HmClaim& h) {
  auto problems = audit(h.dhl);
  std::string label = "H_" + std::to_string(h.m);
  if (h.m != h.dhl.m) problems.push_back(label + ": m differs from the DHL claim");
  if (h.tuple.size() != h.dhl.k) problems.push_back(label + ": tuple size differs from k");
  if (h.bound != h.tuple.diameter()) problems.push_back(label + ": bound differs from the tuple diameter");
  if (!admissible::is_admissible(h.tuple)) problems.push_back(label + ": tuple not admissible");
  return problems;
}

}  // namespace bgaps::pipeline
