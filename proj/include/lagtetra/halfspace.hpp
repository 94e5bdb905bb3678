#pragma once

#include <variant>

#include "lagtetra/projective.hpp"

namespace lagtet {

// Interior point of upper half-space: horizontal coordinate z, height t > 0.
struct H3Interior {
  cx z{0, 0};
  double t = 1;
};

// Point of the half-space compactification: interior or ideal boundary.
struct H3Point {
  std::variant<H3Interior, ProjPoint> v;

  static H3Point interior(cx z, double t) { return {H3Interior{z, t}}; }
  static H3Point boundary(const ProjPoint& p) { return {p}; }

  bool is_interior() const { return std::holds_alternative<H3Interior>(v); }
  const H3Interior& as_interior() const { return std::get<H3Interior>(v); }
  const ProjPoint& as_boundary() const { return std::get<ProjPoint>(v); }
};

// Point of the vertical half-plane model of H^2: horizontal x, height h > 0.
struct H2Point {
  double x = 0;
  double h = 1;
};

double h3_distance(const H3Interior& p, const H3Interior& q);
double h2_distance(const H2Point& p, const H2Point& q);

// Isometric extension of a Moebius map to the half-space interior; boundary
// points transform projectively.
H3Interior poincare_extend(const Mobius& g, const H3Interior& p);
H3Point poincare_extend(const Mobius& g, const H3Point& p);

// Orthogonal projection to the vertical plane P over the real line:
// (x + iy, t) -> (x, sqrt(y^2 + t^2)). Boundary points off RP^1 project to
// their limit (x, |y|); points of RP^1 have no projection.
H2Point project_to_P(const H3Point& p, const Tol& tol = {});

// Distance from an interior point to the plane P.
double distance_to_P(const H3Interior& p);

// The distinguished geodesic l from -i to +i, its arc-length coordinate eta
// (0 at O = (0, 1), increasing toward +i), and the translations along it.
// Chart m sends -i -> 0, +i -> inf, O -> (0, 1).
Mobius chart_m();

// Signed height along l of the interior point p, which must lie on l
// (relative off-axis tolerance 1e-7). NotOnAxis otherwise.
double eta(const H3Interior& p);
bool on_axis(const H3Interior& p);
H3Interior eta_inv(double s);

// Limit of eta toward a boundary point: log of the chart-m modulus.
// -inf at -i, +inf at +i.
double height(const ProjPoint& p);

// Hyperbolic translation of length lam along l; sign +1 moves toward +i.
Mobius axis_translate(double lam, int sign = +1);

// Anti-holomorphic reflection fixing the plane P pointwise (coordinate
// conjugation). An involution; conjugates Moebius data.
ProjPoint reflect_iota(const ProjPoint& p);
H3Interior reflect_iota(const H3Interior& p);
H3Point reflect_iota(const H3Point& p);

// Antipode of a boundary point under the central symmetry of H^3 at c.
ProjPoint antipode(const H3Interior& c, const ProjPoint& p);

// Height of the crossing of the geodesic (u, v) with the vertical axis
// through 0, for u, v finite with u v-bar + v u-bar < 0... returns
// sqrt(-Re(u conj(v))). DomainError when the geodesic misses the axis.
double axis_crossing_height(cx u, cx v);

// Frozen model constants: eta of the points where the model tetra's axis
// meets its boundary faces' data. A_O is the barycenter level of the
// distinguished down tetra, B_O one unit below.
double eta_A_O();
double eta_B_O();

}  // namespace lagtet
