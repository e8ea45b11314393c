#pragma once

#include <array>
#include <string>
#include <vector>

#include "bgaps/cutoff3d/poly3.hpp"

namespace bgaps::cutoff3d {

using Point3 = std::array<Rational, 3>;

// The ten pieces of the chamber 0 < y < x < z of the region x + y + z < 3/2.
inline constexpr std::array<char, 10> kPieceNames{'A', 'B', 'C', 'D', 'E', 'S', 'T', 'U', 'G', 'H'};
// Relabelings; "yzx" is the image of a piece under x -> y, y -> z, z -> x in its inequalities.
inline constexpr std::array<const char*, 6> kPermutations{"xyz", "xzy", "yxz", "yzx", "zxy", "zyx"};

// Arguments at which the canonical piece is evaluated on the relabeled copy: for "yzx"
// the point (x, y, z) of the copy corresponds to (y, z, x) in the canonical chamber.
std::array<Poly3, 3> relabel_arguments(const std::string& perm);

class Polytope3 {
 public:
  Polytope3(char piece, std::string perm, std::vector<Poly3> constraints);

  char piece() const { return piece_; }
  const std::string& perm() const { return perm_; }
  std::string name() const { return std::string(1, piece_) + "_" + perm_; }
  // Affine forms that are strictly positive on the interior.
  const std::vector<Poly3>& constraints() const { return constraints_; }

  bool contains(const Point3& p) const;
  std::vector<Point3> vertices() const;
  Rational volume() const;
  // Exact integral of p over the polytope (fan triangulation into tetrahedra).
  Rational integrate(const Poly3& p) const;

 private:
  char piece_;
  std::string perm_;
  std::vector<Poly3> constraints_;
};

// 6 x 10 polytopes; eps must lie in [1/4, 1/3].
std::vector<Polytope3> build_partition(const Rational& eps);

}  // namespace bgaps::cutoff3d
