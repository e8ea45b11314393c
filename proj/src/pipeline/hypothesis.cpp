#include "bgaps/pipeline/hypothesis.hpp"

#include <stdexcept>

namespace bgaps::pipeline {

const Rational kThetaNearOne = 1 - Rational(1, pow10(9));

namespace {

void require_theta(const Rational& theta) {
  if (theta <= 0 || theta >= 1) throw std::invalid_argument("theta must lie in (0, 1), got " + bgaps::to_string(theta));
}

}  // namespace

Hypothesis Hypothesis::eh(const Rational& theta) {
  require_theta(theta);
  return {HypothesisKind::EH, theta, 0, 0};
}

Hypothesis Hypothesis::geh(const Rational& theta) {
  require_theta(theta);
  return {HypothesisKind::GEH, theta, 0, 0};
}

Hypothesis Hypothesis::mpz(const Rational& varpi, const Rational& delta) {
  if (varpi < 0 || delta < 0) throw std::invalid_argument("MPZ parameters must be non-negative");
  return {HypothesisKind::MPZ, 0, varpi, delta};
}

Hypothesis Hypothesis::bv() { return {HypothesisKind::BV, Rational(1, 2), 0, 0}; }

std::string Hypothesis::to_string() const {
  switch (kind) {
    case HypothesisKind::EH:
      return "EH(" + bgaps::to_string(theta) + ")";
    case HypothesisKind::GEH:
      return "GEH(" + bgaps::to_string(theta) + ")";
    case HypothesisKind::MPZ:
      return "MPZ(" + bgaps::to_string(varpi) + "," + bgaps::to_string(delta) + ")";
    case HypothesisKind::BV:
      return "BV";
  }
  return {};
}

Hypothesis parse_hypothesis(std::string_view text) {
  if (text == "BV") return Hypothesis::bv();
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("malformed hypothesis: " + std::string(text));
  }
  auto name = text.substr(0, open);
  auto args = text.substr(open + 1, text.size() - open - 2);
  if (name == "MPZ") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("MPZ needs two parameters");
    return Hypothesis::mpz(parse_rational(args.substr(0, comma)), parse_rational(args.substr(comma + 1)));
  }
  if (name == "EH") return Hypothesis::eh(parse_rational(args));
  if (name == "GEH") return Hypothesis::geh(parse_rational(args));
  throw std::invalid_argument("unknown hypothesis: " + std::string(name));
}

}  // namespace bgaps::pipeline
