#include "bgaps/cutoff3d/partition.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace bgaps::cutoff3d {

namespace {

Rational affine_value(const Poly3& g, const Point3& p) { return g.eval(p[0], p[1], p[2]); }

std::array<Rational, 4> affine_coeffs(const Poly3& g) {
  return {g.coeff({1, 0, 0}), g.coeff({0, 1, 0}), g.coeff({0, 0, 1}), g.coeff({0, 0, 0})};
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Solve the three planes g_i = 0 by Cramer's rule.
std::optional<Point3> intersect(const Poly3& a, const Poly3& b, const Poly3& c) {
  auto ca = affine_coeffs(a), cb = affine_coeffs(b), cc = affine_coeffs(c);
  std::array<std::array<Rational, 3>, 3> m{{{ca[0], ca[1], ca[2]}, {cb[0], cb[1], cb[2]}, {cc[0], cc[1], cc[2]}}};
  Rational d = det3(m);
  if (d == 0) return std::nullopt;
  std::array<Rational, 3> rhs{-ca[3], -cb[3], -cc[3]};
  Point3 p;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int r = 0; r < 3; ++r) mc[r][col] = rhs[r];
    p[col] = det3(mc) / d;
  }
  return p;
}

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Rational det_points(const Point3& a, const Point3& b, const Point3& c) {
  return det3({{{a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {c[0], c[1], c[2]}}});
}

// Orders the vertices of a planar convex polygon cyclically around their centroid.
void order_polygon(std::vector<Point3>& poly, const std::array<Rational, 4>& normal) {
  unsigned drop = 0;
  for (unsigned i = 1; i < 3; ++i) {
    if (abs(normal[i]) > abs(normal[drop])) drop = i;
  }
  unsigned u = drop == 0 ? 1 : 0;
  unsigned v = drop == 2 ? 1 : 2;
  Rational cu = 0, cv = 0;
  for (const auto& p : poly) {
    cu += p[u];
    cv += p[v];
  }
  cu /= Rational(static_cast<long>(poly.size()));
  cv /= Rational(static_cast<long>(poly.size()));
  auto half = [&](const Point3& p) {
    Rational du = p[u] - cu, dv = p[v] - cv;
    return dv > 0 || (dv == 0 && du > 0) ? 0 : 1;
  };
  std::sort(poly.begin(), poly.end(), [&](const Point3& a, const Point3& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[u] - cu) * (b[v] - cv) - (a[v] - cv) * (b[u] - cu);
    return cross > 0;
  });
}

// Integral of a monomial u^a v^b w^c over the standard simplex.
Rational simplex_monomial(unsigned a, unsigned b, unsigned c) {
  Integer num, fa, fb, fc, den;
  mpz_fac_ui(fa.get_mpz_t(), a);
  mpz_fac_ui(fb.get_mpz_t(), b);
  mpz_fac_ui(fc.get_mpz_t(), c);
  mpz_fac_ui(den.get_mpz_t(), a + b + c + 3);
  num = fa * fb * fc;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational integrate_tetra(const Poly3& p, const Point3& v0, const Point3& v1, const Point3& v2, const Point3& v3) {
  Point3 e1 = sub(v1, v0), e2 = sub(v2, v0), e3 = sub(v3, v0);
  Rational jac = abs(det_points(e1, e2, e3));
  if (jac == 0) return 0;
  std::array<Poly3, 3> args;
  for (unsigned i = 0; i < 3; ++i) {
    Poly3 a(v0[i]);
    a.add_term({1, 0, 0}, e1[i]);
    a.add_term({0, 1, 0}, e2[i]);
    a.add_term({0, 0, 1}, e3[i]);
    args[i] = a;
  }
  Rational total = 0;
  Poly3 mapped = p.compose(args);
  for (const auto& [e, c] : mapped.terms()) total += c * simplex_monomial(e[0], e[1], e[2]);
  return total * jac;
}

Poly3 affine(const char* text, const Rational& eps) { return parse_poly3(text, eps); }

std::vector<const char*> piece_constraints(char piece) {
  // s1 = x + y, s2 = y + z, s3 = z + x inside the chamber s1 < s2 < s3; lo = 1 - eps, hi = 1 + eps.
  switch (piece) {
    case 'A': return {"1-eps-z-x"};
    case 'B': return {"1-eps-y-z", "z+x-1+eps", "1+eps-z-x"};
    case 'C': return {"1-eps-x-y", "y+z-1+eps", "1+eps-z-x"};
    case 'D': return {"x+y-1+eps", "1+eps-z-x"};
    case 'E': return {"1-eps-y-z", "z+x-1-eps"};
    case 'S': return {"1-eps-x-y", "y+z-1+eps", "1+eps-y-z", "z+x-1-eps", "1/2+eps-z"};
    case 'T': return {"1-eps-x-y", "y+z-1+eps", "1+eps-y-z", "z+x-1-eps", "z-1/2-eps", "x-1/2+eps"};
    case 'U': return {"1-eps-x-y", "y+z-1+eps", "1+eps-y-z", "z+x-1-eps", "1/2-eps-x"};
    case 'G': return {"1-eps-x-y", "y+z-1-eps"};
    case 'H': return {"x+y-1+eps", "1+eps-y-z", "z+x-1-eps"};
    default: throw std::invalid_argument(std::string("unknown piece ") + piece);
  }
}

}  // namespace

std::array<Poly3, 3> relabel_arguments(const std::string& perm) {
  if (perm.size() != 3) throw std::invalid_argument("bad permutation " + perm);
  std::array<Poly3, 3> args;
  std::array<bool, 3> seen{};
  for (unsigned i = 0; i < 3; ++i) {
    char c = perm[i];
    if (c < 'x' || c > 'z' || seen[c - 'x']) throw std::invalid_argument("bad permutation " + perm);
    seen[c - 'x'] = true;
    args[i] = Poly3::variable(static_cast<Var>(c - 'x'));
  }
  return args;
}

Polytope3::Polytope3(char piece, std::string perm, std::vector<Poly3> constraints)
    : piece_(piece), perm_(std::move(perm)), constraints_(std::move(constraints)) {}

bool Polytope3::contains(const Point3& p) const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const Poly3& g) { return affine_value(g, p) > 0; });
}

std::vector<Point3> Polytope3::vertices() const {
  std::vector<Point3> out;
  auto n = constraints_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        auto p = intersect(constraints_[a], constraints_[b], constraints_[c]);
        if (!p) continue;
        bool ok = std::all_of(constraints_.begin(), constraints_.end(),
                              [&](const Poly3& g) { return affine_value(g, *p) >= 0; });
        if (ok && std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
      }
    }
  }
  return out;
}

Rational Polytope3::volume() const { return integrate(Poly3(1)); }

Rational Polytope3::integrate(const Poly3& p) const {
  auto verts = vertices();
  if (verts.size() < 4) return 0;
  Point3 centre{0, 0, 0};
  for (const auto& v : verts) {
    for (unsigned i = 0; i < 3; ++i) centre[i] += v[i];
  }
  for (auto& c : centre) c /= Rational(static_cast<long>(verts.size()));

  std::vector<std::vector<Point3>> facets;
  Rational total = 0;
  for (const auto& g : constraints_) {
    std::vector<Point3> face;
    for (const auto& v : verts) {
      if (affine_value(g, v) == 0) face.push_back(v);
    }
    if (face.size() < 3) continue;
    order_polygon(face, affine_coeffs(g));
    auto sorted = face;
    std::sort(sorted.begin(), sorted.end());
    bool dup = false;
    for (const auto& f : facets) dup = dup || f == sorted;
    if (dup) continue;
    facets.push_back(std::move(sorted));
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      total += integrate_tetra(p, centre, face[0], face[i], face[i + 1]);
    }
  }
  return total;
}

std::vector<Polytope3> build_partition(const Rational& eps) {
  if (eps < Rational(1, 4) || eps > Rational(1, 3)) throw std::invalid_argument("eps must lie in [1/4, 1/3]");
  std::vector<Polytope3> out;
  std::vector<const char*> chamber{"y", "z-x", "x-y", "3/2-x-y-z"};
  for (const char* perm : kPermutations) {
    auto args = relabel_arguments(perm);
    for (char piece : kPieceNames) {
      std::vector<Poly3> cons;
      for (const char* c : chamber) cons.push_back(affine(c, eps).compose(args));
      for (const char* c : piece_constraints(piece)) cons.push_back(affine(c, eps).compose(args));
      out.emplace_back(piece, perm, std::move(cons));
    }
  }
  return out;
}

}  // namespace bgaps::cutoff3d
