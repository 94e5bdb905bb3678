#include "lagtetra/projective.hpp"

#include <algorithm>
#include <cmath>

namespace lagtet {

const char* err_name(Err e) {
  switch (e) {
    case Err::DegenerateInput: return "DegenerateInput";
    case Err::ZeroForm: return "ZeroForm";
    case Err::NotLagrangian: return "NotLagrangian";
    case Err::NotOnQuadric: return "NotOnQuadric";
    case Err::NotRegular: return "NotRegular";
    case Err::NotOnAxis: return "NotOnAxis";
    case Err::UndefinedProjection: return "UndefinedProjection";
    case Err::NotInOmega: return "NotInOmega";
    case Err::AmbiguousBoundary: return "AmbiguousBoundary";
    case Err::DomainError: return "DomainError";
    case Err::NumericalDegeneracy: return "NumericalDegeneracy";
    case Err::NotUnimodular: return "NotUnimodular";
    case Err::InconsistentSequence: return "InconsistentSequence";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool ProjPoint::is_infinity(double eps) const {
  return std::abs(b) <= eps * std::max(std::abs(a), std::abs(b));
}

ProjPoint ProjPoint::normalized() const {
  double na = std::abs(a), nb = std::abs(b);
  if (na == 0 && nb == 0) fail(Err::DegenerateInput, "zero homogeneous pair");
  cx lead = (na >= nb) ? a : b;
  cx s = lead / std::abs(lead);
  double scale = std::max(na, nb);
  return {a / s / scale, b / s / scale};
}

double chordal(const ProjPoint& p, const ProjPoint& q) {
  double np = std::hypot(std::abs(p.a), std::abs(p.b));
  double nq = std::hypot(std::abs(q.a), std::abs(q.b));
  if (np == 0 || nq == 0) fail(Err::DegenerateInput, "zero homogeneous pair");
  return std::abs(p.a * q.b - q.a * p.b) / (np * nq);
}

bool is_real_point(const ProjPoint& p, double eps) {
  double n2 = sq(std::abs(p.a)) + sq(std::abs(p.b));
  return std::abs(std::imag(p.a * std::conj(p.b))) <= eps * n2;
}

ProjPoint conj(const ProjPoint& p) { return {std::conj(p.a), std::conj(p.b)}; }

bool proj_less(const ProjPoint& p, const ProjPoint& q) {
  ProjPoint pn = p.normalized(), qn = q.normalized();
  auto key = [](const ProjPoint& r) {
    return std::array<double, 4>{r.a.real(), r.a.imag(), r.b.real(), r.b.imag()};
  };
  return key(pn) < key(qn);
}

Mobius Mobius::normalized(cx a, cx b, cx c, cx d) {
  cx det = a * d - b * c;
  if (std::abs(det) == 0) fail(Err::DegenerateInput, "singular matrix");
  cx s = principal_sqrt(det);
  return {a / s, b / s, c / s, d / s};
}

Mobius Mobius::inverse() const { return {d, -b, -c, a}; }

ProjPoint Mobius::apply(const ProjPoint& p) const {
  return {a * p.a + b * p.b, c * p.a + d * p.b};
}

cx Mobius::apply_affine(cx z) const {
  cx den = c * z + d;
  return (a * z + b) / den;
}

Mobius operator*(const Mobius& g, const Mobius& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
          g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

bool is_real_mobius(const Mobius& g, double eps) {
  double n = std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)});
  if (n == 0) return false;
  // Real up to the det-normalization phase: either all entries real or all
  // purely imaginary.
  double im = std::max({std::abs(g.a.imag()), std::abs(g.b.imag()),
                        std::abs(g.c.imag()), std::abs(g.d.imag())});
  double re = std::max({std::abs(g.a.real()), std::abs(g.b.real()),
                        std::abs(g.c.real()), std::abs(g.d.real())});
  return im <= eps * n || re <= eps * n;
}

namespace {

// "Determinant" pairing of homogeneous pairs; zero iff the points coincide.
cx pair_det(const ProjPoint& p, const ProjPoint& q) { return p.a * q.b - q.a * p.b; }

}  // namespace

cx cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
               const ProjPoint& p4, const Tol& tol) {
  const ProjPoint* pts[4] = {&p1, &p2, &p3, &p4};
  int coincident = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (chordal(*pts[i], *pts[j]) <= tol.tol) ++coincident;
  if (coincident > 1)
    fail(Err::DegenerateInput, "cross ratio needs at least three distinct points");
  cx num = pair_det(p3, p1) * pair_det(p4, p2);
  cx den = pair_det(p3, p2) * pair_det(p4, p1);
  return num / den;
}

Mobius mobius_fixing_triple(const std::array<ProjPoint, 3>& src,
                            const std::array<ProjPoint, 3>& dst,
                            const Tol& tol) {
  auto triple_to_std = [&](const std::array<ProjPoint, 3>& t) {
    // Sends t[0] -> inf, t[1] -> 0, t[2] -> 1.
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (chordal(t[i], t[j]) <= tol.tol)
          fail(Err::DegenerateInput, "triple has coincident points");
    cx d31 = pair_det(t[2], t[0]);
    cx d32 = pair_det(t[2], t[1]);
    return Mobius::normalized(d31 * t[1].b, -d31 * t[1].a,
                              d32 * t[0].b, -d32 * t[0].a);
  };
  Mobius A = triple_to_std(src);
  Mobius B = triple_to_std(dst);
  Mobius g = B.inverse() * A;
  cx s = principal_sqrt(g.det());
  return {g.a / s, g.b / s, g.c / s, g.d / s};
}

std::array<cx, 4> Sym3Matrix::apply(const std::array<cx, 4>& p) const {
  std::array<cx, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * p[j];
  return out;
}

Sym3Matrix sym3(const Mobius& g) {
  // Basis transport via h = (g^{-1})^T applied to the linear forms X, Y:
  // a cubic p(X, Y) pulls back to p(h11 X + h21 Y, h12 X + h22 Y), which
  // moves every root r of p to g(r).
  cx h11 = g.d, h12 = -g.c, h21 = -g.b, h22 = g.a;
  // fx = h11 X + h21 Y, fy = h12 X + h22 Y; column k holds the coefficients
  // of fx^(3-k) fy^k in the basis (X^3, X^2 Y, X Y^2, Y^3).
  Sym3Matrix S;
  std::array<cx, 2> fx{h11, h21}, fy{h12, h22};
  for (int k = 0; k < 4; ++k) {
    std::array<cx, 4> col{cx(1, 0), cx(0, 0), cx(0, 0), cx(0, 0)};
    int deg = 0;
    auto mul_linear = [&](const std::array<cx, 2>& f) {
      std::array<cx, 4> next{};
      for (int i = 0; i <= deg; ++i) {
        next[i] += col[i] * f[0];
        next[i + 1] += col[i] * f[1];
      }
      col = next;
      ++deg;
    };
    for (int i = 0; i < 3 - k; ++i) mul_linear(fx);
    for (int i = 0; i < k; ++i) mul_linear(fy);
    for (int i = 0; i < 4; ++i) S.m[i][k] = col[i];
  }
  return S;
}

}  // namespace lagtet
