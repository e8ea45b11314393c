#include "bgaps/varprob/solver.hpp"

#include <stdexcept>

namespace bgaps::varprob {

namespace {

using Vec = std::vector<Real>;
using Mat = std::vector<Vec>;

// Restores the previous default precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Mat to_real(const RatMatrix& m) {
  Mat r(m.size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = varprob::to_real(m[i][j]);
  }
  return r;
}

Mat cholesky(const Mat& a) {
  auto n = a.size();
  Mat l(n, Vec(n, Real(0)));
  for (std::size_t j = 0; j < n; ++j) {
    Real s = a[j][j];
    for (std::size_t p = 0; p < j; ++p) s -= l[j][p] * l[j][p];
    if (s <= 0) throw std::domain_error("M1 not positive definite");
    l[j][j] = sqrt(s);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real t = a[i][j];
      for (std::size_t p = 0; p < j; ++p) t -= l[i][p] * l[j][p];
      l[i][j] = t / l[j][j];
    }
  }
  return l;
}

Vec lower_solve(const Mat& l, Vec b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t p = 0; p < i; ++p) b[i] -= l[i][p] * b[p];
    b[i] /= l[i][i];
  }
  return b;
}

Vec upper_solve_transposed(const Mat& l, Vec b) {
  for (std::size_t i = b.size(); i-- > 0;) {
    for (std::size_t p = i + 1; p < b.size(); ++p) b[i] -= l[p][i] * b[p];
    b[i] /= l[i][i];
  }
  return b;
}

Vec mul(const Mat& a, const Vec& x) {
  Vec y(x.size(), Real(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

Real dot(const Vec& x, const Vec& y) {
  Real s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Real normalize(Vec& x) {
  Real n = sqrt(dot(x, x));
  for (auto& v : x) v /= n;
  return n;
}

// Solves (A - shift I) x = b by Gaussian elimination with partial pivoting.
Vec shifted_solve(const Mat& a, const Real& shift, Vec b) {
  auto n = b.size();
  Mat m = a;
  for (std::size_t i = 0; i < n; ++i) m[i][i] -= shift;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    }
    std::swap(m[c], m[piv]);
    std::swap(b[c], b[piv]);
    if (m[c][c] == 0) m[c][c] = std::numeric_limits<Real>::epsilon();
    for (std::size_t r = c + 1; r < n; ++r) {
      Real f = m[r][c] / m[c][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) b[i] -= m[i][j] * b[j];
    b[i] /= m[i][i];
  }
  return b;
}

Real residual(const Mat& c, const Vec& y, const Real& rho) {
  auto cy = mul(c, y);
  for (std::size_t i = 0; i < y.size(); ++i) cy[i] -= rho * y[i];
  return sqrt(dot(cy, cy)) / abs(rho);
}

}  // namespace

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rational to_rational(const Real& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  return q;
}

Eigenpair solve_generalized(const RatMatrix& M1, const RatMatrix& M2, double tol, unsigned digits) {
  auto n = M1.size();
  if (n == 0 || M2.size() != n) throw std::invalid_argument("matrix dimensions do not match");
  PrecisionScope scope(digits);
  auto l = cholesky(to_real(M1));
  auto a2 = to_real(M2);

  // C = L^{-1} M2 L^{-T}, symmetric.
  Mat c(n, Vec(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, Real(0));
    e[j] = 1;
    auto col = lower_solve(l, mul(a2, upper_solve_transposed(l, e)));
    for (std::size_t i = 0; i < n; ++i) c[i][j] = col[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) c[i][j] = c[j][i] = (c[i][j] + c[j][i]) / 2;
  }

  Real target = tol;
  unsigned budget = 10 * static_cast<unsigned>(n) + 50;
  Vec y(n, Real(1));
  normalize(y);
  Real rho = dot(y, mul(c, y));
  unsigned it = 0;
  Real res = residual(c, y, rho);
  // Power iteration until the estimate is roughly settled, then Rayleigh-quotient steps.
  for (; it < budget && res > Real(1e-3); ++it) {
    y = mul(c, y);
    normalize(y);
    rho = dot(y, mul(c, y));
    res = residual(c, y, rho);
  }
  Real strict = pow(Real(10), -static_cast<int>(digits) / 2);
  for (; it < budget && res > strict; ++it) {
    auto z = shifted_solve(c, rho, y);
    normalize(z);
    Real next = dot(z, mul(c, z));
    if (next < rho - abs(rho) * Real(1e-6)) break;
    y = std::move(z);
    rho = next;
    res = residual(c, y, rho);
  }
  if (res > target) throw std::runtime_error("iteration did not converge within budget");

  Eigenpair out;
  out.value = rho;
  out.vector = upper_solve_transposed(l, y);
  out.iterations = it;
  out.residual = res;
  return out;
}

}  // namespace bgaps::varprob
