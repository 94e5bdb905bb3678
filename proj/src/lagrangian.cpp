#include "lagtetra/lagrangian.hpp"

#include <algorithm>
#include <cmath>

namespace lagtet {

double Plucker::norm() const {
  double s = 0;
  for (auto v : w) s += sq(std::abs(v));
  return std::sqrt(s);
}

double Plucker::quadric_residual() const {
  double n2 = sq(norm());
  if (n2 == 0) fail(Err::DegenerateInput, "zero Plucker vector");
  return std::abs(w[0] * w[5] - w[1] * w[4] + w[2] * w[3]) / n2;
}

double Plucker::lagrangian_residual() const {
  double n = norm();
  if (n == 0) fail(Err::DegenerateInput, "zero Plucker vector");
  return std::abs(w[2] - w[3] / 3.0) / n;
}

Plucker plucker_of(const CubicForm& p1, const CubicForm& p2) {
  auto minor = [&](int i, int j) { return p1.c[i] * p2.c[j] - p1.c[j] * p2.c[i]; };
  return Plucker{{minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3),
                  minor(2, 3)}};
}

double plucker_distance(const Plucker& p, const Plucker& q) {
  double np = p.norm(), nq = q.norm();
  if (np == 0 || nq == 0) fail(Err::DegenerateInput, "zero Plucker vector");
  cx inner = 0;
  for (int i = 0; i < 6; ++i) inner += p.w[i] * std::conj(q.w[i]);
  cx phase = (std::abs(inner) == 0) ? cx(1, 0) : inner / std::abs(inner);
  double s = 0;
  for (int i = 0; i < 6; ++i)
    s += sq(std::abs(p.w[i] / np - phase * q.w[i] / nq));
  return std::sqrt(s);
}

Lagrangian::Lagrangian(const CubicForm& p1, const CubicForm& p2, const Tol& tol)
    : p1_(p1), p2_(p2), w_(plucker_of(p1, p2)) {
  double n1 = p1.norm(), n2 = p2.norm();
  if (n1 == 0 || n2 == 0) fail(Err::ZeroForm, "zero basis element");
  if (w_.norm() <= 1e-12 * n1 * n2)
    fail(Err::DegenerateInput, "basis elements are numerically dependent");
  double rel = std::abs(omega(p1, p2)) / (n1 * n2);
  if (rel > std::max(tol.tol, 1e-12))
    fail(Err::NotLagrangian, "basis is not isotropic for the symplectic form");
}

CubicForm Lagrangian::element(cx s, cx t) const { return s * p1_ + t * p2_; }

Lagrangian lagrangian_from_plucker(const Plucker& w, const Tol& tol) {
  if (w.quadric_residual() > std::max(tol.tol, 1e-10))
    fail(Err::NotOnQuadric, "Plucker vector violates the quadric relation");
  if (w.lagrangian_residual() > std::max(tol.tol, 1e-10))
    fail(Err::NotLagrangian, "Plucker vector violates the isotropy relation");

  // Antisymmetric matrix of the decomposable 2-vector; its nonzero columns
  // span the plane.
  cx O[4][4] = {};
  const int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int k = 0; k < 6; ++k) {
    O[idx[k][0]][idx[k][1]] = w.w[k];
    O[idx[k][1]][idx[k][0]] = -w.w[k];
  }
  std::array<double, 4> colnorm{};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) colnorm[j] += sq(std::abs(O[i][j]));
  int j1 = 0;
  for (int j = 1; j < 4; ++j)
    if (colnorm[j] > colnorm[j1]) j1 = j;
  CubicForm c1, c2;
  double bestw = -1;
  int j2 = -1;
  for (int j = 0; j < 4; ++j) {
    if (j == j1) continue;
    CubicForm cand;
    for (int i = 0; i < 4; ++i) cand.c[i] = O[i][j];
    CubicForm first;
    for (int i = 0; i < 4; ++i) first.c[i] = O[i][j1];
    double wn = plucker_of(first, cand).norm();
    if (wn > bestw) {
      bestw = wn;
      j2 = j;
      c1 = first;
      c2 = cand;
    }
  }
  if (j2 < 0 || bestw <= 1e-12 * sq(w.norm()))
    fail(Err::NotOnQuadric, "Plucker vector is not decomposable");
  Lagrangian L(c1, c2, tol);
  if (plucker_distance(L.plucker(), w) > 1e-6)
    fail(Err::NotOnQuadric, "Plucker vector is not decomposable");
  return L;
}

double lagrangian_distance(const Lagrangian& a, const Lagrangian& b) {
  return plucker_distance(a.plucker(), b.plucker());
}

Lagrangian transport(const Sym3Matrix& S, const Lagrangian& W, const Tol& tol) {
  return Lagrangian(CubicForm{S.apply(W.basis1().c)}, CubicForm{S.apply(W.basis2().c)},
                    tol);
}

const char* orbit_name(Orbit o) {
  switch (o) {
    case Orbit::Open: return "Open";
    case Orbit::Intermediate: return "Intermediate";
    case Orbit::Closed: return "Closed";
  }
  return "?";
}

namespace {

// Orthonormal basis of the plane; makes the resultant and pencil
// discriminant scale-stable invariants of the plane itself.
struct OrthoBasis {
  CubicForm e1, e2;
  // Conversion back to the stored-basis pencil: s e1 + t e2 =
  // alpha p1 + beta p2 with (alpha, beta) = (s/n1 - t k/(m n1), t/m).
  cx n1, kappa, m;
};

OrthoBasis ortho_basis(const Lagrangian& W) {
  const CubicForm& p1 = W.basis1();
  const CubicForm& p2 = W.basis2();
  double n1 = p1.norm();
  CubicForm e1 = (cx(1.0 / n1, 0)) * p1;
  cx kappa = 0;
  for (int i = 0; i < 4; ++i) kappa += p2.c[i] * std::conj(e1.c[i]);
  CubicForm r = p2 + (-kappa) * e1;
  double m = r.norm();
  if (m <= 1e-12 * p2.norm())
    fail(Err::DegenerateInput, "basis elements are numerically dependent");
  CubicForm e2 = (cx(1.0 / m, 0)) * r;
  return {e1, e2, cx(n1, 0), kappa, cx(m, 0)};
}

ProjPoint pencil_to_stored(const OrthoBasis& ob, cx s, cx t) {
  cx alpha = s / ob.n1 - t * ob.kappa / (ob.m * ob.n1);
  cx beta = t / ob.m;
  return ProjPoint{alpha, beta}.normalized();
}

// Element of the orthonormal pencil at parameter [s : t].
CubicForm ortho_element(const OrthoBasis& ob, cx s, cx t) {
  return s * ob.e1 + t * ob.e2;
}

ProjPoint intermediate_witness(const OrthoBasis& ob, const Tol& tol) {
  auto r1 = cubic_roots(ob.e1, tol);
  auto r2 = cubic_roots(ob.e2, tol);
  double best = 2;
  ProjPoint c1, c2;
  for (const auto& a : r1)
    for (const auto& b : r2) {
      double d = chordal(a, b);
      if (d < best) {
        best = d;
        c1 = a;
        c2 = b;
      }
    }
  // Polish on the side where the root is simple (larger gradient).
  ProjPoint a = c1.normalized(), b = c2.normalized();
  auto g1 = ob.e1.gradient(a);
  auto g2 = ob.e2.gradient(b);
  double m1 = std::hypot(std::abs(g1[0]), std::abs(g1[1]));
  double m2 = std::hypot(std::abs(g2[0]), std::abs(g2[1]));
  return (m1 >= m2) ? polish_root(ob.e1, a, 3) : polish_root(ob.e2, b, 3);
}

}  // namespace

OrbitClass classify_orbit(const Lagrangian& W, const Tol& tol) {
  OrthoBasis ob = ortho_basis(W);
  double res = std::abs(resultant(ob.e1, ob.e2));
  if (res >= 10 * tol.tol) return {Orbit::Open, std::nullopt, 0};
  if (res >= tol.tol)
    fail(Err::NumericalDegeneracy, "resultant falls in the ambiguous band");

  auto quartic = pencil_discriminant(ob.e1, ob.e2);
  double qmax = 0;
  for (auto v : quartic) qmax = std::max(qmax, std::abs(v));
  if (qmax < 64 * tol.tol) {
    // Every element shares a double root; extract it from a non-cube element.
    CubicForm e = ob.e1;
    if (is_near_cube(e)) e = ob.e2;
    if (is_near_cube(e)) e = (ortho_element(ob, cx(1, 0), cx(0.3777, 0))).normalized();
    return {Orbit::Closed, double_root_of(e), 2};
  }
  return {Orbit::Intermediate, intermediate_witness(ob, tol), 1};
}

std::vector<PencilEntry> pencil_double_roots(const Lagrangian& W, const Tol& tol) {
  OrthoBasis ob = ortho_basis(W);
  auto quartic = pencil_discriminant(ob.e1, ob.e2);
  double qmax = 0;
  for (auto v : quartic) qmax = std::max(qmax, std::abs(v));
  if (qmax < 64 * tol.tol)
    fail(Err::NumericalDegeneracy,
         "pencil discriminant vanishes identically, repeated roots everywhere");

  std::vector<cx> qc(quartic.begin(), quartic.end());
  auto raw = homogeneous_roots(qc, tol);

  // Cluster pencil roots; multiple points (triple root for Intermediate
  // planes) collapse to one candidate each.
  std::vector<ProjPoint> reps;
  for (const auto& r : raw) {
    bool merged = false;
    for (const auto& s : reps)
      if (chordal(r, s) <= std::sqrt(tol.cluster)) {
        merged = true;
        break;
      }
    if (!merged) reps.push_back(r);
  }

  std::vector<PencilEntry> out;
  for (const auto& pr : reps) {
    CubicForm q = ortho_element(ob, pr.a, pr.b);
    double qn = q.norm();
    if (qn <= 1e-12) continue;
    CubicForm qq = (cx(1.0 / qn, 0)) * q;
    if (is_near_cube(qq)) continue;  // cube directions carry a triple root
    ProjPoint dr = double_root_of(qq);
    auto quad = deflate(qq, dr);
    std::vector<cx> lin{quad[0], quad[1], quad[2]};
    auto l = ProjPoint{0, 1};
    {
      // Deflate the quadratic once more by the double root.
      std::vector<cx> q2 = lin;
      std::vector<cx> rem(2);
      if (std::abs(dr.a) <= std::abs(dr.b)) {
        cx r = dr.a / dr.b;
        rem[0] = q2[0];
        rem[1] = q2[1] + r * q2[0];
        l = ProjPoint{-rem[1], rem[0]};
      } else {
        cx u = dr.b / dr.a;
        cx b0 = q2[2];
        cx b1 = q2[1] + u * b0;
        l = ProjPoint{-b0, b1};
      }
    }
    out.push_back({pencil_to_stored(ob, pr.a, pr.b), dr, l});
  }
  std::sort(out.begin(), out.end(), [](const PencilEntry& a, const PencilEntry& b) {
    return proj_less(a.double_root, b.double_root);
  });
  return out;
}

bool in_KR(const Lagrangian& W, const Tol& tol) {
  OrbitClass c = classify_orbit(W, tol);
  if (c.tag == Orbit::Open) return false;
  return is_real_point(*c.witness, std::max(tol.tol, 1e-9));
}

bool in_Omega(const Lagrangian& W, const Tol& tol) { return !in_KR(W, tol); }

CubicForm veronese1(const ProjPoint& t) {
  return cubic_from_roots(t, t, t);
}

Lagrangian veronese2(const ProjPoint& t, const ProjPoint& aux, const Tol& tol) {
  if (chordal(t, aux) <= tol.tol)
    fail(Err::DegenerateInput, "auxiliary point coincides with the base point");
  CubicForm q1 = veronese1(t);
  CubicForm q2 = cubic_from_roots(t, t, aux);
  return Lagrangian(q1, q2, tol);
}

}  // namespace lagtet
