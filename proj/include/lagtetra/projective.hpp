#pragma once

#include <array>
#include <optional>

#include "lagtetra/errors.hpp"
#include "lagtetra/numeric.hpp"

namespace lagtet {

// Point of the complex projective line, stored as a homogeneous pair [a : b].
// b == 0 is the point at infinity. Never both zero.
struct ProjPoint {
  cx a{0.0, 0.0};
  cx b{1.0, 0.0};

  static ProjPoint infinity() { return {cx(1, 0), cx(0, 0)}; }
  static ProjPoint from_affine(cx z) { return {z, cx(1, 0)}; }

  bool is_infinity(double eps = 1e-14) const;
  // Affine value a/b; infinite when b ~ 0.
  cx affine() const { return a / b; }

  // Scale so the larger coordinate has modulus 1 and the first nonzero
  // coordinate is real positive. Canonical representative for sorting.
  ProjPoint normalized() const;
};

// Fubini-Study chordal distance, range [0, 1]. Stable for nearby points.
double chordal(const ProjPoint& p, const ProjPoint& q);

// True when the point lies on the real circle RP^1 = R u {inf}.
bool is_real_point(const ProjPoint& p, double eps);

ProjPoint conj(const ProjPoint& p);

// Deterministic ordering key used to sort root lists.
bool proj_less(const ProjPoint& p, const ProjPoint& q);

// Moebius transformation z -> (az + b)/(cz + d), stored det-normalized
// unless built through raw().
struct Mobius {
  cx a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};

  static Mobius identity() { return {}; }
  // Scales to det 1 using the principal square root branch.
  static Mobius normalized(cx a, cx b, cx c, cx d);
  static Mobius raw(cx a, cx b, cx c, cx d) { return {a, b, c, d}; }

  cx det() const { return a * d - b * c; }
  Mobius inverse() const;  // valid for det 1
  ProjPoint apply(const ProjPoint& p) const;
  cx apply_affine(cx z) const;  // may return inf
};

Mobius operator*(const Mobius& g, const Mobius& h);

bool is_real_mobius(const Mobius& g, double eps);

// Cross ratio with the normalization cr(inf, 0, 1, z) = z.
// Requires at least three of the four points pairwise distinct.
cx cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
               const ProjPoint& p4, const Tol& tol = {});

// The unique Moebius map sending src[k] -> dst[k] for k = 0, 1, 2.
// Each triple must be pairwise distinct.
Mobius mobius_fixing_triple(const std::array<ProjPoint, 3>& src,
                            const std::array<ProjPoint, 3>& dst,
                            const Tol& tol = {});

// Third symmetric power acting on cubic-form coefficient vectors in the basis
// (X^3, X^2 Y, X Y^2, Y^3). Transport is root-covariant: the roots of
// sym3(g) p are the g-images of the roots of p.
struct Sym3Matrix {
  std::array<std::array<cx, 4>, 4> m{};

  std::array<cx, 4> apply(const std::array<cx, 4>& p) const;
};

Sym3Matrix sym3(const Mobius& g);

}  // namespace lagtet
