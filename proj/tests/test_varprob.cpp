#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bgaps/bounds/closed_forms.hpp"
#include "bgaps/bounds/m4eps.hpp"
#include "bgaps/symmpoly/algebra.hpp"
#include "bgaps/varprob/certificate.hpp"
#include "bgaps/varprob/krylov.hpp"

using namespace bgaps;
using namespace bgaps::varprob;

namespace {

double as_double(const Rational& q) { return q.get_d(); }
double as_double(const Real& x) { return static_cast<double>(x); }

double mk_upper(unsigned k) { return static_cast<double>(bounds::mk_upper(k)); }

}  // namespace

TEST_CASE("degree zero Gram pairs") {
  auto g = assemble_plain(2, 0);
  REQUIRE(g.size() == 1);
  CHECK(g.M1[0][0] == Rational(1, 2));
  CHECK(g.M2[0][0] == Rational(2, 3));
  for (unsigned k = 2; k <= 7; ++k) CHECK(assemble_plain(k, 0).M1[0][0] == frac(1, symmpoly::factorial(k)));
  auto e = assemble_eps(2, 0, Rational(1, 4));
  CHECK(e.M1[0][0] == Rational(25, 32));
  CHECK(e.M2[0][0] == Rational(39, 32));
}

TEST_CASE("Gram matrices are symmetric and positive definite") {
  for (auto [k, d] : {std::pair{2u, 6u}, {3u, 5u}, {4u, 4u}, {5u, 4u}}) {
    auto g = assemble_plain(k, d);
    CHECK(is_symmetric(g.M1));
    CHECK(is_symmetric(g.M2));
    CHECK(is_positive_definite(g.M1));
  }
  auto e = assemble_eps(3, 4, Rational(1, 5));
  CHECK(is_symmetric(e.M1));
  CHECK(is_symmetric(e.M2));
  CHECK(is_positive_definite(e.M1));
  CHECK_FALSE(is_positive_definite(RatMatrix{{1, 1}, {1, 1}}));
}

TEST_CASE("dependent basis elements are dropped") {
  auto full = make_basis(2, 4, false);
  auto g = assemble_eps(2, 4, Rational(1, 2));
  CHECK(g.size() == 9);
  CHECK(assemble_eps(2, 6, Rational(1, 2)).size() == 16);
  CHECK(independent_prefix(RatMatrix{{1, 2, 3}, {2, 4, 6}, {3, 6, 10}}) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("threads do not change the matrices") {
  auto a = assemble_plain(3, 5, false, 1);
  auto b = assemble_plain(3, 5, false, 3);
  CHECK(a.M1 == b.M1);
  CHECK(a.M2 == b.M2);
}

TEST_CASE("basis prefix property and monotone certificates") {
  auto small = make_basis(3, 3, false);
  auto big = make_basis(3, 6, false);
  REQUIRE(small.size() <= big.size());
  CHECK(std::equal(small.begin(), small.end(), big.begin()));
  Rational previous = 0;
  for (unsigned d = 0; d <= 6; ++d) {
    auto c = find_certificate(assemble_plain(3, d));
    CHECK(c.verified);
    CHECK(c.C >= previous - frac(1, pow10(20)));
    CHECK(as_double(c.C) < mk_upper(3));
    previous = c.C;
  }
}

TEST_CASE("generalized eigenvalue solver") {
  auto g = assemble_plain(2, 0);
  CHECK(as_double(solve_generalized(g.M1, g.M2).value) == doctest::Approx(4.0 / 3).epsilon(1e-12));
  RatMatrix id{{2, 1}, {1, 3}};
  CHECK(as_double(solve_generalized(id, id).value) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(solve_generalized(RatMatrix{{1, 2}, {2, 1}}, id), std::domain_error);
}

TEST_CASE("certificates") {
  auto g = assemble_plain(2, 0);
  CHECK(certify(g, {1}, Rational(13, 10)).verified);
  CHECK_FALSE(certify(g, {1}, Rational(4, 3)).verified);
  CHECK_FALSE(certify(g, {0}, Rational(1)).verified);

  CHECK(rationalize(Rational(1, 2), Integer(10)) == Rational(1, 2));
  CHECK(rationalize(parse_rational("1.38593"), Integer(100)) == Rational(79, 57));
  CHECK(rationalize(Rational(0), Integer(100)) == 0);
  CHECK(round_down_strict(Rational(1, 3), 3) == Rational(333, 1000));
  CHECK(round_down_strict(Rational(1, 2), 1) == Rational(2, 5));
}

TEST_CASE("k = 2 certificates against the symbolic oracle") {
  auto c2 = find_certificate(assemble_plain(2, 2));
  CHECK(as_double(c2.C) == doctest::Approx(1.38565346547634).epsilon(1e-11));
  auto c3 = find_certificate(assemble_plain(2, 3));
  CHECK(as_double(c3.C) == doctest::Approx(1.38590932649361).epsilon(1e-11));
  auto c8 = find_certificate(assemble_plain(2, 8));
  CHECK(c8.verified);
  CHECK(as_double(c8.C) > 1.38593);
  CHECK(as_double(c8.C) < static_cast<double>(bounds::m2_exact()));

  double m2_half = static_cast<double>(bounds::m2_eps(bounds::Real(1) / 2));
  double upper_half = static_cast<double>(bounds::mkeps_upper(2, bounds::Real(1) / 2));
  for (auto [d, expected] : {std::pair{2u, 1.7665487551102}, {4u, 1.77357686417696}, {6u, 1.77674138282551}}) {
    auto c = find_certificate(assemble_eps(2, d, Rational(1, 2)));
    CHECK(c.verified);
    CHECK(as_double(c.C) == doctest::Approx(expected).epsilon(1e-11));
    CHECK(as_double(c.C) < m2_half);
    CHECK(as_double(c.C) < upper_half);
  }
}

TEST_CASE("k = 3 certificates") {
  auto c = find_certificate(assemble_plain(3, 6));
  CHECK(c.verified);
  CHECK(as_double(c.C) == doctest::Approx(1.6464319422).epsilon(1e-9));
  CHECK(as_double(c.C) < mk_upper(3));
  auto e = find_certificate(assemble_eps(3, 4, Rational(1, 4)));
  CHECK(e.verified);
  CHECK(as_double(e.C) < static_cast<double>(bounds::mkeps_upper(3, bounds::Real(1) / 4)));
}

TEST_CASE("linear cutoff in four dimensions matches the direct computation") {
  Rational eps(21, 125), alpha(98, 125);
  auto g = assemble_eps(4, 1, eps);
  REQUIRE(g.size() == 2);
  // 1 - alpha P_1 = (1 - alpha (1 + eps)) + alpha (1 + eps - P_1)
  std::vector<Rational> a{1 - alpha * (1 + eps), alpha};
  auto quad = [&](const RatMatrix& m) {
    Rational s = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += a[i] * m[i][j] * a[j];
    return s;
  };
  auto direct = bounds::m4eps_check(eps, alpha);
  CHECK(quad(g.M1) == direct.I);
  CHECK(quad(g.M2) == 4 * direct.J);
}

TEST_CASE("Krylov moments") {
  for (unsigned k = 2; k <= 10; ++k) {
    auto t = krylov_moments(k, 2);
    REQUIRE(t.moments.size() == 4);
    CHECK(t.moments[0] == frac(1, symmpoly::factorial(k)));
    CHECK(t.moments[1] == frac(2 * k, symmpoly::factorial(k + 1)));
    CHECK(t.moments[2] == frac(k * (5 * k + 1), symmpoly::factorial(k + 2)));
    CHECK(t.moments[3] == frac(2 * k * k * (7 * k + 5), symmpoly::factorial(k + 3)));
    for (const auto& m : krylov_moments(k, 4).moments) CHECK(m > 0);
  }
}

TEST_CASE("Krylov bounds") {
  CHECK(krylov_lower_bound(2, 1).C < Rational(4, 3));
  CHECK(as_double(krylov_lower_bound(2, 1).C) == doctest::Approx(4.0 / 3).epsilon(1e-12));
  for (unsigned k = 2; k <= 5; ++k) {
    Rational previous = 0;
    for (unsigned n = 1; n <= 10; ++n) {
      auto c = krylov_lower_bound(k, n);
      CHECK(c.verified);
      CHECK(c.C >= previous - frac(1, pow10(25)));
      CHECK(as_double(c.C) < mk_upper(k));
      previous = c.C;
    }
  }
  auto c = krylov_lower_bound(2, 25);
  CHECK(as_double(c.C) >= 1.38592);
}

TEST_CASE("certificate files") {
  auto c = find_certificate(assemble_eps(2, 2, Rational(1, 3)));
  std::stringstream s;
  write_certificate(s, c);
  auto back = read_certificate(s);
  CHECK(back.variant == c.variant);
  CHECK(back.a == c.a);
  CHECK(back.C == c.C);
  CHECK(verify_certificate(back).verified);
  back.C += 1;
  CHECK_FALSE(verify_certificate(back).verified);

  auto k = krylov_lower_bound(3, 6);
  std::stringstream ks;
  write_certificate(ks, k);
  CHECK(verify_certificate(read_certificate(ks)).verified);

  std::istringstream bad("variant = plain\nk = 2\n");
  CHECK_THROWS(read_certificate(bad));
}
