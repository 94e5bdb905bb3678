#include "lagtetra/cubic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace lagtet {

double CubicForm::norm() const {
  double s = 0;
  for (auto v : c) s += sq(std::abs(v));
  return std::sqrt(s);
}

CubicForm CubicForm::normalized() const {
  double n = norm();
  if (n == 0) fail(Err::ZeroForm, "zero cubic form");
  CubicForm out;
  for (int i = 0; i < 4; ++i) out.c[i] = c[i] / n;
  return out;
}

cx CubicForm::eval(const ProjPoint& p) const {
  cx x = p.a, y = p.b;
  return ((c[0] * x + c[1] * y) * x + c[2] * y * y) * x + c[3] * y * y * y;
}

std::array<cx, 2> CubicForm::gradient(const ProjPoint& p) const {
  cx x = p.a, y = p.b;
  cx dx = 3.0 * c[0] * x * x + 2.0 * c[1] * x * y + c[2] * y * y;
  cx dy = c[1] * x * x + 2.0 * c[2] * x * y + 3.0 * c[3] * y * y;
  return {dx, dy};
}

CubicForm operator+(const CubicForm& p, const CubicForm& q) {
  CubicForm r;
  for (int i = 0; i < 4; ++i) r.c[i] = p.c[i] + q.c[i];
  return r;
}

CubicForm operator*(cx s, const CubicForm& p) {
  CubicForm r;
  for (int i = 0; i < 4; ++i) r.c[i] = s * p.c[i];
  return r;
}

std::array<cx, 2> linear_form(const ProjPoint& r) { return {r.b, -r.a}; }

CubicForm cubic_from_roots(const ProjPoint& r1, const ProjPoint& r2,
                           const ProjPoint& r3) {
  std::array<cx, 4> acc{cx(1, 0), 0, 0, 0};
  int deg = 0;
  for (const ProjPoint* r : {&r1, &r2, &r3}) {
    auto l = linear_form(*r);
    std::array<cx, 4> next{};
    for (int i = 0; i <= deg; ++i) {
      next[i] += acc[i] * l[0];
      next[i + 1] += acc[i] * l[1];
    }
    acc = next;
    ++deg;
  }
  return CubicForm{acc};
}

cx omega(const CubicForm& p, const CubicForm& q) {
  return p.c[0] * q.c[3] - p.c[3] * q.c[0] -
         (p.c[1] * q.c[2] - p.c[2] * q.c[1]) / 3.0;
}

std::array<std::array<cx, 4>, 4> omega_gram() {
  std::array<std::array<cx, 4>, 4> J{};
  J[0][3] = cx(1, 0);
  J[3][0] = cx(-1, 0);
  J[1][2] = cx(-1.0 / 3.0, 0);
  J[2][1] = cx(1.0 / 3.0, 0);
  return J;
}

cx discriminant(const CubicForm& p) {
  cx a = p.c[0], b = p.c[1], c = p.c[2], d = p.c[3];
  return b * b * c * c - 4.0 * a * c * c * c - 4.0 * d * b * b * b -
         27.0 * a * a * d * d + 18.0 * a * b * c * d;
}

cx resultant(const CubicForm& p, const CubicForm& q) {
  Eigen::Matrix<cx, 6, 6> S = Eigen::Matrix<cx, 6, 6>::Zero();
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k < 4; ++k) {
      S(r, r + k) = p.c[k];
      S(r + 3, r + k) = q.c[k];
    }
  return S.determinant();
}

namespace {

// Synthetic division of sum coeff[i] X^(n-i) Y^i by the linear form of root,
// in the chart where the root coordinate has modulus <= 1.
std::vector<cx> deflate_generic(const std::vector<cx>& coeff, const ProjPoint& root) {
  int n = static_cast<int>(coeff.size()) - 1;
  std::vector<cx> out(n);
  if (std::abs(root.a) <= std::abs(root.b)) {
    cx r = root.a / root.b;
    cx acc = coeff[0];
    for (int i = 0; i < n; ++i) {
      out[i] = acc;
      acc = coeff[i + 1] + r * acc;
    }
  } else {
    cx u = root.b / root.a;  // working on the reversed polynomial
    cx acc = coeff[n];
    std::vector<cx> rev(n);
    for (int i = 0; i < n; ++i) {
      rev[i] = acc;
      acc = coeff[n - 1 - i] + u * acc;
    }
    for (int i = 0; i < n; ++i) out[i] = rev[n - 1 - i];
  }
  return out;
}

cx eval_chart(const std::vector<cx>& coeff, cx x) {
  cx v = coeff[0];
  for (size_t i = 1; i < coeff.size(); ++i) v = v * x + coeff[i];
  return v;
}

cx eval_chart_deriv(const std::vector<cx>& coeff, cx x) {
  int n = static_cast<int>(coeff.size()) - 1;
  cx v = 0;
  for (int i = 0; i < n; ++i) v = v * x + coeff[i] * cx(n - i, 0);
  return v;
}

ProjPoint polish_generic(const std::vector<cx>& coeff, ProjPoint r, int steps) {
  std::vector<cx> rev(coeff.rbegin(), coeff.rend());
  for (int s = 0; s < steps; ++s) {
    if (std::abs(r.a) <= std::abs(r.b)) {
      cx x = r.a / r.b;
      cx d = eval_chart_deriv(coeff, x);
      if (std::abs(d) == 0) break;
      r = {x - eval_chart(coeff, x) / d, cx(1, 0)};
    } else {
      cx u = r.b / r.a;
      cx d = eval_chart_deriv(rev, u);
      if (std::abs(d) == 0) break;
      r = {cx(1, 0), u - eval_chart(rev, u) / d};
    }
  }
  return r;
}

}  // namespace

std::vector<ProjPoint> homogeneous_roots(const std::vector<cx>& coeff, const Tol&) {
  int n = static_cast<int>(coeff.size()) - 1;
  double scale = 0;
  for (auto v : coeff) scale = std::max(scale, std::abs(v));
  if (scale == 0) fail(Err::ZeroForm, "zero polynomial");
  double lead_eps = 1e-12 * scale;

  int i0 = 0;
  while (i0 <= n && std::abs(coeff[i0]) <= lead_eps) ++i0;
  int i1 = n;
  while (i1 >= i0 && std::abs(coeff[i1]) <= lead_eps) --i1;

  std::vector<ProjPoint> roots;
  for (int k = 0; k < i0; ++k) roots.push_back(ProjPoint::infinity());
  for (int k = i1; k < n; ++k) roots.push_back(ProjPoint::from_affine(0));

  int m = i1 - i0;
  if (m > 0) {
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
    for (int k = 0; k < m; ++k) C(0, k) = -coeff[i0 + 1 + k] / coeff[i0];
    for (int k = 1; k < m; ++k) C(k, k - 1) = 1;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cx> chart(coeff.begin() + i0, coeff.begin() + i1 + 1);
    for (int k = 0; k < m; ++k) {
      ProjPoint r = ProjPoint::from_affine(es.eigenvalues()(k));
      roots.push_back(polish_generic(chart, r, 3));
    }
  }
  return roots;
}

bool is_near_cube(const CubicForm& p, double eps) {
  cx a = p.c[0], b = p.c[1], c = p.c[2], d = p.c[3];
  double h = std::max({std::abs(b * b - 3.0 * a * c), std::abs(b * c - 9.0 * a * d),
                       std::abs(c * c - 3.0 * b * d)});
  double n2 = sq(p.norm());
  return h <= eps * n2;
}

ProjPoint double_root_of(const CubicForm& p) {
  cx a = p.c[0], b = p.c[1], c = p.c[2], d = p.c[3];
  cx num = 9.0 * a * d - b * c;
  cx den1 = 2.0 * (b * b - 3.0 * a * c);
  cx den2 = 2.0 * (c * c - 3.0 * b * d);
  double n2 = sq(p.norm());
  if (std::max(std::abs(den1), std::abs(den2)) <= 1e-12 * n2)
    fail(Err::DomainError, "cubic is a near perfect cube, no isolated double root");
  if (std::abs(den1) >= std::abs(den2)) return ProjPoint{num, den1};
  return ProjPoint{den2, num};
}

std::array<cx, 3> deflate(const CubicForm& p, const ProjPoint& root) {
  auto q = deflate_generic({p.c[0], p.c[1], p.c[2], p.c[3]}, root);
  return {q[0], q[1], q[2]};
}

ProjPoint polish_root(const CubicForm& p, ProjPoint r, int steps) {
  return polish_generic({p.c[0], p.c[1], p.c[2], p.c[3]}, r, steps);
}

std::vector<ProjPoint> cubic_roots(const CubicForm& p, const Tol& tol) {
  CubicForm pn = p.normalized();
  double cl2 = std::max(sq(tol.cluster), 1e-13);

  std::vector<ProjPoint> out;
  if (is_near_cube(pn, cl2)) {
    // Triple root; read it off coefficient ratios of the cube.
    ProjPoint r = (std::abs(pn.c[0]) >= std::abs(pn.c[3]))
                      ? ProjPoint{-pn.c[1], 3.0 * pn.c[0]}
                      : ProjPoint{-3.0 * pn.c[3], pn.c[2]};
    out = {r, r, r};
  } else if (std::abs(discriminant(pn)) < cl2) {
    ProjPoint dr = double_root_of(pn);
    auto quad = deflate(pn, dr);
    auto lin = deflate_generic({quad[0], quad[1], quad[2]}, dr);
    ProjPoint sr{-lin[1], lin[0]};
    out = {dr, dr, sr};
  } else {
    out = homogeneous_roots({pn.c[0], pn.c[1], pn.c[2], pn.c[3]}, tol);
  }
  std::sort(out.begin(), out.end(), proj_less);
  return out;
}

std::array<cx, 5> pencil_discriminant(const CubicForm& p1, const CubicForm& p2) {
  // Linear coefficient functions c_i(s, t) = s p1[i] + t p2[i]; each
  // discriminant monomial is a product of four of them.
  struct Term {
    int i, j, k, l;
    double w;
  };
  static const Term terms[] = {
      {1, 1, 2, 2, 1.0}, {0, 2, 2, 2, -4.0}, {3, 1, 1, 1, -4.0},
      {0, 0, 3, 3, -27.0}, {0, 1, 2, 3, 18.0}};
  std::array<cx, 5> out{};
  for (const Term& t : terms) {
    std::array<cx, 5> acc{cx(t.w, 0), 0, 0, 0, 0};
    int deg = 0;
    for (int idx : {t.i, t.j, t.k, t.l}) {
      std::array<cx, 5> next{};
      for (int m = 0; m <= deg; ++m) {
        next[m] += acc[m] * p1.c[idx];
        next[m + 1] += acc[m] * p2.c[idx];
      }
      acc = next;
      ++deg;
    }
    for (int m = 0; m < 5; ++m) out[m] += acc[m];
  }
  return out;
}

}  // namespace lagtet
