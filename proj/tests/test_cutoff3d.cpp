#include <doctest.h>

#include <random>

#include "bgaps/cutoff3d/cutoff.hpp"

using namespace bgaps;
using namespace bgaps::cutoff3d;

namespace {

Point3 random_point(std::mt19937_64& rng) {
  // A distinct prime denominator per coordinate keeps samples off every piece boundary.
  const long shift[3] = {7919, 7907, 7901};
  Point3 p;
  for (int i = 0; i < 3; ++i) p[i] = frac(static_cast<long>(rng() % 1499) + 1, 1000) + frac(1, shift[i]);
  return p;
}

}  // namespace

TEST_CASE("polynomials") {
  auto p = parse_poly3("-66+96 x-147 x^2+51 x y z", 0);
  CHECK(p.coeff({0, 0, 0}) == -66);
  CHECK(p.coeff({1, 1, 1}) == 51);
  CHECK(p.degree() == 3);
  CHECK(parse_poly3("1/2-3eps/2", Rational(1, 4)) == Poly3(Rational(1, 8)));
  CHECK(parse_poly3("3/2-x-y") == Poly3(Rational(3, 2)) - Poly3::variable(X) - Poly3::variable(Y));
  auto x = Poly3::variable(X), y = Poly3::variable(Y);
  CHECK((x * x).integrate(X, Poly3(0), y) == Rational(1, 3) * y * y * y);
  CHECK(x.integrate(X, Poly3(1), Poly3(0)) == Poly3(Rational(-1, 2)));
  CHECK((x + y).substitute(Y, x) == Rational(2) * x);
  CHECK(p.eval(1, 1, 1) == -66 + 96 - 147 + 51);
  CHECK_THROWS(parse_poly3("x^"));
}

TEST_CASE("partition") {
  auto parts = build_partition(Rational(1, 4));
  CHECK(parts.size() == 60);
  Rational total = 0;
  for (const auto& p : parts) total += p.volume();
  CHECK(total == Rational(9, 16));
  for (const auto& p : parts) CHECK(p.volume() > 0);

  std::mt19937_64 rng(99);
  int inside = 0;
  for (int i = 0; i < 4000; ++i) {
    auto q = random_point(rng);
    if (q[0] + q[1] + q[2] >= Rational(3, 2)) continue;
    int hits = 0;
    for (const auto& p : parts) hits += p.contains(q);
    REQUIRE(hits == 1);
    ++inside;
  }
  CHECK(inside > 500);

  CHECK_THROWS(build_partition(Rational(1, 2)));
  for (const auto& p : build_partition(Rational(3, 10))) CHECK(p.volume() >= 0);
}

TEST_CASE("displayed limits agree with the polytopes") {
  Rational eps(1, 4);
  auto parts = build_partition(eps);
  auto f = reference_cutoff();
  for (const auto& [piece, blocks] : i_limits(eps)) {
    Rational by_limits = 0, squared_limits = 0, by_polytope = 0, squared_polytope = 0;
    auto sq = f.pieces.at(piece) * f.pieces.at(piece);
    for (const auto& b : blocks) {
      by_limits += integrate_iterated(Poly3(1), b);
      squared_limits += integrate_iterated(sq, b);
    }
    for (const auto& p : parts) {
      if (p.piece() != piece || p.perm() != "xyz") continue;
      by_polytope += p.volume();
      squared_polytope += p.integrate(sq);
    }
    CAPTURE(piece);
    CHECK(by_limits == by_polytope);
    CHECK(squared_limits == squared_polytope);
  }
}

TEST_CASE("published values") {
  auto r = verify_cutoff(reference_cutoff());
  CHECK(r.I == Rational("62082439864241/507343011840"));
  CHECK(r.J == Rational("9933190664926733/40587440947200"));
  CHECK(r.J / r.I - 2 == Rational("286648173/4966595189139280"));
  CHECK(r.marginals.size() == 6);
  for (const auto& [id, residual] : r.marginals) {
    CAPTURE(id);
    CHECK(residual.is_zero());
  }
  CHECK(r.ok());
  CHECK(verify_theorem_piece());
}

TEST_CASE("synthetic cutoffs") {
  auto one = constant_cutoff(1);
  CHECK(integrate_I(one) == Rational(9, 16));
  auto zero = constant_cutoff(0);
  CHECK(integrate_I(zero) == 0);
  CHECK(integrate_J(zero) == 0);
  for (const auto& [id, residual] : check_marginals(zero)) CHECK(residual.is_zero());

  auto altered = reference_cutoff();
  altered.pieces['H'] = parse_poly3("9 z");
  bool broken = false;
  for (const auto& [id, residual] : check_marginals(altered)) broken |= !residual.is_zero();
  CHECK(broken);

  auto shifted = reference_cutoff();
  shifted.eps = Rational(1, 3);
  broken = false;
  for (const auto& [id, residual] : check_marginals(shifted)) broken |= !residual.is_zero();
  CHECK(broken);

  auto with_d = reference_cutoff();
  with_d.pieces['D'] = Poly3(1);
  auto base = verify_cutoff(reference_cutoff());
  auto changed = verify_cutoff(with_d);
  CHECK(changed.I > base.I);
  CHECK(changed.J == base.J);
  CHECK(changed.J / changed.I < base.J / base.I);
}

TEST_CASE("relabeling") {
  auto f = reference_cutoff();
  // A_yzx is the copy of A with x -> y, y -> z, z -> x.
  auto parts = build_partition(Rational(1, 4));
  Point3 canonical{Rational(1, 10), Rational(1, 20), Rational(1, 5)};
  Point3 moved{canonical[2], canonical[0], canonical[1]};
  for (const auto& p : parts) {
    if (p.name() == "A_xyz") CHECK(p.contains(canonical));
    if (p.name() == "A_yzx") CHECK(p.contains(moved));
  }
  CHECK(f.on('A', "yzx").eval(moved[0], moved[1], moved[2]) ==
        f.pieces.at('A').eval(canonical[0], canonical[1], canonical[2]));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto q = random_point(rng);
    if (q[0] + q[1] + q[2] >= Rational(3, 2)) continue;
    auto v = f.at(q);
    REQUIRE(v.has_value());
    for (const auto& p : parts) {
      if (p.contains(q)) CHECK(f.on(p.piece(), p.perm()).eval(q[0], q[1], q[2]) == *v);
    }
    Point3 swapped{q[1], q[2], q[0]};
    CHECK(f.at(swapped) == v);
  }
  CHECK_FALSE(f.at(Point3{Rational(1), Rational(1), Rational(1)}).has_value());
}

TEST_CASE("I is invariant under a consistent relabeling") {
  auto f = reference_cutoff();
  auto parts = build_partition(Rational(1, 4));
  Rational total = 0;
  for (const auto& p : parts) {
    auto piece = f.on(p.piece(), p.perm());
    total += p.integrate(piece * piece);
  }
  CHECK(total == integrate_I(f));
}
