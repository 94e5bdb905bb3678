#include "lagtetra/tetra.hpp"

#include <cmath>

namespace lagtet {

cx regular_shape() { return cx(0.5, -std::sqrt(3.0) / 2.0); }

cx shape_invariant(const IdealTetra& T, const Tol& tol) {
  cx r = cross_ratio(T.v[0], T.v[1], T.v[2], T.v[3], tol);
  if (r.imag() > 0) r = 1.0 / r;
  return r;
}

bool is_regular(const IdealTetra& T, double eps) {
  try {
    cx r = shape_invariant(T);
    return std::abs(r - regular_shape()) <= eps;
  } catch (const Error&) {
    return false;
  }
}

H3Interior barycenter(const IdealTetra& T, const Tol& tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (chordal(T.v[i], T.v[j]) <= tol.tol)
        fail(Err::NotRegular, "tetra has coincident vertices");

  const cx zp(0.5, std::sqrt(3.0) / 2.0);
  const cx zm(0.5, -std::sqrt(3.0) / 2.0);
  const std::array<ProjPoint, 3> target{ProjPoint::infinity(),
                                        ProjPoint::from_affine(cx(-1, 0)),
                                        ProjPoint::from_affine(zp)};
  const ProjPoint fourth = ProjPoint::from_affine(zm);

  // Search vertex orderings whose triple map carries the fourth vertex to
  // the model position; the model barycenter is (0, sqrt 2).
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 4; ++k) {
        if (k == i || k == j) continue;
        int l = 6 - i - j - k;
        Mobius A = mobius_fixing_triple({T.v[i], T.v[j], T.v[k]}, target, tol);
        if (chordal(A.apply(T.v[l]), fourth) < 1e-6)
          return poincare_extend(A.inverse(), H3Interior{cx(0, 0), std::sqrt(2.0)});
      }
    }
  fail(Err::NotRegular, "no vertex ordering matches the regular model");
}

DecoratedTetra dual_tetra(const IdealTetra& T, const Tol& tol) {
  H3Interior c = barycenter(T, tol);
  DecoratedTetra D{T, {}, c};
  for (int i = 0; i < 4; ++i) D.dual[i] = antipode(c, T.v[i]).normalized();
  return D;
}

Lagrangian g_map(const DecoratedTetra& T, const Tol& tol) {
  ProjPoint v0 = T.tetra.v[0].normalized(), v1 = T.tetra.v[1].normalized();
  ProjPoint d0 = T.dual[0].normalized(), d1 = T.dual[1].normalized();
  CubicForm q1 = cubic_from_roots(v0, v0, d0);
  CubicForm q2 = cubic_from_roots(v1, v1, d1);
  return Lagrangian(q1, q2, tol);
}

Lagrangian g_map(const DegenTetra& D, const Tol& tol) {
  ProjPoint f = D.first.normalized();
  if (D.diagonal(tol.cluster)) {
    ProjPoint aux{-std::conj(f.b), std::conj(f.a)};
    return Lagrangian(cubic_from_roots(f, f, f), cubic_from_roots(f, f, aux), tol);
  }
  ProjPoint s = D.second.normalized();
  return Lagrangian(cubic_from_roots(f, f, f), cubic_from_roots(f, s, s), tol);
}

TetraOrDegen g_inverse(const Lagrangian& W, const Tol& tol) {
  OrbitClass cls = classify_orbit(W, tol);
  if (cls.tag == Orbit::Closed) return DegenTetra{*cls.witness, *cls.witness};
  if (cls.tag == Orbit::Intermediate) {
    auto entries = pencil_double_roots(W, tol);
    if (entries.size() != 1)
      fail(Err::NumericalDegeneracy,
           "intermediate plane without a unique squared pencil element");
    return DegenTetra{cls.witness->normalized(), entries[0].double_root.normalized()};
  }
  auto entries = pencil_double_roots(W, tol);
  if (entries.size() != 4)
    fail(Err::NumericalDegeneracy, "open plane without four squared pencil elements");
  DecoratedTetra T;
  for (int i = 0; i < 4; ++i) {
    T.tetra.v[i] = entries[i].double_root.normalized();
    T.dual[i] = entries[i].single_root.normalized();
  }
  T.bary = barycenter(T.tetra, tol);
  return T;
}

H3Point project_Q(const Lagrangian& W, const Tol& tol) {
  TetraOrDegen td = g_inverse(W, tol);
  if (std::holds_alternative<DecoratedTetra>(td))
    return H3Point::interior(std::get<DecoratedTetra>(td).bary.z,
                             std::get<DecoratedTetra>(td).bary.t);
  return H3Point::boundary(std::get<DegenTetra>(td).first);
}

double face_distance(const DecoratedTetra& T, int opposite, const Tol& tol) {
  std::array<ProjPoint, 3> face;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != opposite) face[k++] = T.tetra.v[i];
  const std::array<ProjPoint, 3> target{ProjPoint::from_affine(cx(0, 0)),
                                        ProjPoint::from_affine(cx(1, 0)),
                                        ProjPoint::infinity()};
  Mobius A = mobius_fixing_triple(face, target, tol);
  H3Interior x = poincare_extend(A, T.bary);
  return std::asinh(std::abs(x.z.imag()) / x.t);
}

DecoratedTetra reflect_iota(const DecoratedTetra& T) {
  DecoratedTetra R;
  for (int i = 0; i < 4; ++i) {
    R.tetra.v[i] = conj(T.tetra.v[i]);
    R.dual[i] = conj(T.dual[i]);
  }
  R.bary = reflect_iota(T.bary);
  return R;
}

DegenTetra reflect_iota(const DegenTetra& D) {
  return {conj(D.first), conj(D.second)};
}

DecoratedTetra transport(const Mobius& g, const DecoratedTetra& T) {
  DecoratedTetra R;
  for (int i = 0; i < 4; ++i) {
    R.tetra.v[i] = g.apply(T.tetra.v[i]);
    R.dual[i] = g.apply(T.dual[i]);
  }
  R.bary = poincare_extend(g, T.bary);
  return R;
}

}  // namespace lagtet
