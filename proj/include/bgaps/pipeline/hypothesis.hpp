#pragma once

#include <string>
#include <string_view>

#include "bgaps/common/rational.hpp"

namespace bgaps::pipeline {

enum class HypothesisKind { EH, GEH, MPZ, BV };

// Equidistribution hypothesis tag. BV stands for EH(theta) for every theta < 1/2 and
// carries theta = 1/2 as a supremum; comparisons against it are strict.
struct Hypothesis {
  HypothesisKind kind = HypothesisKind::BV;
  Rational theta{1, 2};
  Rational varpi = 0;
  Rational delta = 0;

  static Hypothesis eh(const Rational& theta);
  static Hypothesis geh(const Rational& theta);
  static Hypothesis mpz(const Rational& varpi, const Rational& delta);
  static Hypothesis bv();

  bool is_eh_family() const { return kind == HypothesisKind::EH || kind == HypothesisKind::BV; }
  std::string to_string() const;
  bool operator==(const Hypothesis&) const = default;
};

// Stand-in for "theta sufficiently close to 1" under the full EH or GEH.
extern const Rational kThetaNearOne;

// "EH(1/2)", "GEH(999999999/1000000000)", "MPZ(1/100,1/50)", "BV".
Hypothesis parse_hypothesis(std::string_view text);

}  // namespace bgaps::pipeline
