#include "lagtetra/halfspace.hpp"

#include <cmath>
#include <limits>

namespace lagtet {

double h3_distance(const H3Interior& p, const H3Interior& q) {
  double num = sq(std::abs(p.z - q.z)) + sq(p.t - q.t);
  double arg = 1.0 + num / (2.0 * p.t * q.t);
  return std::acosh(std::max(1.0, arg));
}

double h2_distance(const H2Point& p, const H2Point& q) {
  double num = sq(p.x - q.x) + sq(p.h - q.h);
  double arg = 1.0 + num / (2.0 * p.h * q.h);
  return std::acosh(std::max(1.0, arg));
}

H3Interior poincare_extend(const Mobius& g, const H3Interior& p) {
  cx den1 = g.c * p.z + g.d;
  double den = sq(std::abs(den1)) + sq(std::abs(g.c)) * sq(p.t);
  cx znum = (g.a * p.z + g.b) * std::conj(den1) + g.a * std::conj(g.c) * sq(p.t);
  double dd = std::abs(g.det());
  return {znum / den, p.t * dd / den};
}

H3Point poincare_extend(const Mobius& g, const H3Point& p) {
  if (p.is_interior()) return {poincare_extend(g, p.as_interior())};
  return {g.apply(p.as_boundary())};
}

H2Point project_to_P(const H3Point& p, const Tol& tol) {
  if (p.is_interior()) {
    const H3Interior& q = p.as_interior();
    return {q.z.real(), std::hypot(q.z.imag(), q.t)};
  }
  const ProjPoint& b = p.as_boundary();
  if (is_real_point(b, std::max(tol.tol, 1e-12)))
    fail(Err::UndefinedProjection, "boundary point lies on the real circle");
  if (b.is_infinity())
    fail(Err::UndefinedProjection, "boundary point lies on the real circle");
  cx z = b.affine();
  return {z.real(), std::abs(z.imag())};
}

double distance_to_P(const H3Interior& p) {
  double r = std::hypot(p.z.imag(), p.t);
  return std::acosh(std::max(1.0, r / p.t));
}

Mobius chart_m() {
  double s = 1.0 / std::sqrt(2.0);
  return Mobius::raw(cx(s, 0), cx(0, s), cx(0, s), cx(s, 0));
}

bool on_axis(const H3Interior& p) {
  H3Interior q = poincare_extend(chart_m(), p);
  return std::abs(q.z) <= 1e-7 * std::max(1.0, q.t);
}

double eta(const H3Interior& p) {
  H3Interior q = poincare_extend(chart_m(), p);
  if (std::abs(q.z) > 1e-7 * std::max(1.0, q.t))
    fail(Err::NotOnAxis, "point does not lie on the distinguished geodesic");
  return std::log(q.t);
}

H3Interior eta_inv(double s) {
  return poincare_extend(chart_m().inverse(), {cx(0, 0), std::exp(s)});
}

double height(const ProjPoint& p) {
  ProjPoint q = chart_m().apply(p);
  double na = std::abs(q.a), nb = std::abs(q.b);
  if (nb == 0) return std::numeric_limits<double>::infinity();
  if (na == 0) return -std::numeric_limits<double>::infinity();
  return std::log(na / nb);
}

Mobius axis_translate(double lam, int sign) {
  double h = 0.5 * lam * (sign >= 0 ? 1.0 : -1.0);
  Mobius d = Mobius::raw(cx(std::exp(h), 0), 0, 0, cx(std::exp(-h), 0));
  return chart_m().inverse() * d * chart_m();
}

ProjPoint reflect_iota(const ProjPoint& p) { return conj(p); }

H3Interior reflect_iota(const H3Interior& p) { return {std::conj(p.z), p.t}; }

H3Point reflect_iota(const H3Point& p) {
  if (p.is_interior()) return {reflect_iota(p.as_interior())};
  return {reflect_iota(p.as_boundary())};
}

ProjPoint antipode(const H3Interior& c, const ProjPoint& p) {
  // Transport c to (0, 1); the central symmetry there is [a:b] -> [-b^*:a^*].
  double rt = std::sqrt(c.t);
  Mobius K = Mobius::raw(cx(1.0 / rt, 0), -c.z / rt, 0, cx(rt, 0));
  ProjPoint q = K.apply(p);
  ProjPoint r{-std::conj(q.b), std::conj(q.a)};
  return K.inverse().apply(r);
}

double axis_crossing_height(cx u, cx v) {
  double s = -std::real(u * std::conj(v));
  if (s <= 0)
    fail(Err::DomainError, "geodesic does not cross the vertical axis");
  return std::sqrt(s);
}

double eta_A_O() { return std::log((std::sqrt(6.0) - std::sqrt(2.0)) / 2.0); }

double eta_B_O() { return eta_A_O() - 1.0; }

}  // namespace lagtet
