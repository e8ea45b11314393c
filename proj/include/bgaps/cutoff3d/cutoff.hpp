#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgaps/cutoff3d/partition.hpp"

namespace bgaps::cutoff3d {

// Symmetric piecewise polynomial F, given by its ten canonical pieces.
struct PiecewiseF {
  Rational eps{1, 4};
  std::map<char, Poly3> pieces;

  // The piece on a relabeled copy, as a polynomial in (x, y, z).
  Poly3 on(char piece, const std::string& perm) const;
  // F at a point, by sorting it into the chamber 0 < y < x < z and classifying.
  // Returns nullopt on a piece boundary or outside the region.
  std::optional<Rational> at(const Point3& p) const;
};

PiecewiseF reference_cutoff();
PiecewiseF constant_cutoff(const Rational& c, const Rational& eps = Rational(1, 4));

// One iterated integral: variables outer to inner with their limits.
struct Limit {
  Var var;
  Poly3 lo, hi;
};
using IteratedIntegral = std::vector<Limit>;

// Nine I-blocks per displayed formula (D has no displayed formula).
std::map<char, std::vector<IteratedIntegral>> i_limits(const Rational& eps);
Rational integrate_iterated(const Poly3& p, const IteratedIntegral& block);

struct ZSegment {
  char piece;
  std::string perm;
  Poly3 lo, hi;
};
struct JRegion {
  std::vector<IteratedIntegral> outer;  // blocks over (x, y)
  std::vector<ZSegment> segments;
};
std::vector<JRegion> j_regions(const Rational& eps);

struct Marginal {
  std::string id;
  std::vector<ZSegment> segments;
};
std::vector<Marginal> marginal_conditions(const Rational& eps);

// I(F) = 6 sum_P I(F on P); the D piece goes through the polytope integrator.
Rational integrate_I(const PiecewiseF& f);
// J(F) = 6 (J_1 + ... + J_8).
Rational integrate_J(const PiecewiseF& f);
std::vector<std::pair<std::string, Poly3>> check_marginals(const PiecewiseF& f);

struct PieceReport {
  Rational I, J;
  std::vector<std::pair<std::string, Poly3>> marginals;
  bool marginals_vanish = false;
  bool ratio_above_two = false;
  bool ok() const { return marginals_vanish && ratio_above_two; }
};
PieceReport verify_cutoff(const PiecewiseF& f);
// The built-in F: reference I and J, vanishing marginals, J > 2 I.
bool verify_theorem_piece();

extern const Rational kReferenceI;
extern const Rational kReferenceJ;

}  // namespace bgaps::cutoff3d
