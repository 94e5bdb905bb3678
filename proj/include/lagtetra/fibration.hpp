#pragma once

#include <optional>
#include <vector>

#include "lagtetra/tetra.hpp"

namespace lagtet {

// Real line completed by the two infinities; flow parameter of the fibration.
struct ExtReal {
  enum class K { Finite, PlusInf, MinusInf };
  K k = K::Finite;
  double value = 0;

  static ExtReal finite(double v) { return {K::Finite, v}; }
  static ExtReal plus_inf() { return {K::PlusInf, 0}; }
  static ExtReal minus_inf() { return {K::MinusInf, 0}; }
  bool is_finite() const { return k == K::Finite; }
};

// Coordinate of a down tetra: the low vertex and the fiber angle of the
// three high vertices, theta in [0, 2 pi / 3).
struct DownCoord {
  ProjPoint v;
  double theta = 0;
};

enum class UpDown { Up, Down, DownThree };

struct UpDownClass {
  UpDown kind = UpDown::Up;
  std::optional<DownCoord> coord;  // Down and DownThree
  int bottom_index = -1;
};

// Splits tetra with barycenter on the axis by the level s_c + eta(B_O):
// Up when all vertices sit above it, Down when exactly one is below,
// DownThree when that vertex is -i. AmbiguousBoundary within 1e-9 of the
// level; NumericalDegeneracy when two or more vertices are below.
UpDownClass updown_classify(const DecoratedTetra& T, const Tol& tol = {});

// Rebuilds the down tetra with barycenter at eta = c_eta from its
// coordinate. Exact inverse of updown_classify's coordinate chart.
DecoratedTetra make_down_tetra(double c_eta, const DownCoord& dc, const Tol& tol = {});

// Shifts a down tetra lam along the axis keeping its low vertex fixed
// (coordinate-wise barycenter shift). DownThree translates rigidly.
DecoratedTetra M_shift(double lam, const DecoratedTetra& T, const Tol& tol = {});

// Height reassignment of the flow: f(v) = v + 1/(eta(B_O) - v), a bijection
// (-inf, eta(B_O)) -> R, and its inverse.
double f_shift(double v);
double f_shift_inv(double h);

// Bottom-height profile of the flow at time s: min(v + s, f(v)).
double rho_s(double v, double s);

// Point of the fiber over O: a tetra with barycenter over O, or a
// degenerate limit with shared root +i / -i and residual point `second`.
struct FiberPoint {
  enum class Kind { Tetra, DegenPlus, DegenMinus };
  Kind kind = Kind::Tetra;
  std::optional<DecoratedTetra> tetra;
  std::optional<ProjPoint> second;

  static FiberPoint from_tetra(const DecoratedTetra& T) {
    return {Kind::Tetra, T, std::nullopt};
  }
  static FiberPoint degen_plus(const ProjPoint& z) {
    return {Kind::DegenPlus, std::nullopt, z};
  }
  static FiberPoint degen_minus(const ProjPoint& z) {
    return {Kind::DegenMinus, std::nullopt, z};
  }
};

FiberPoint reflect_iota(const FiberPoint& p);

// The plane a fiber point corresponds to.
Lagrangian fiber_to_lagrangian(const FiberPoint& p, const Tol& tol = {});

double fiber_distance(const FiberPoint& a, const FiberPoint& b, const Tol& tol = {});

// Equivariant projection to the half plane: project_Q followed by the
// orthogonal projection to P. NotInOmega on K_R.
H2Point project_q(const Lagrangian& W, const Tol& tol = {});

// Membership in the fiber over O = (0, 1): the tetra stratum when the
// barycenter projects to O, the degenerate strata when the shared root is
// +-i. nullopt otherwise.
std::optional<FiberPoint> in_fiber_O(const Lagrangian& W, const Tol& tol = {});

// The flow on the fiber over O at time s (possibly infinite). T must have
// barycenter at O.
FiberPoint phi(const DecoratedTetra& T, const ExtReal& s, const Tol& tol = {});

// n distinct tetra representatives flowing to the degenerate point
// DegenPlus(z) at s = +inf. Pre: z != +i.
std::vector<DecoratedTetra> phi_fiber(const ProjPoint& z, int n, const Tol& tol = {});

}  // namespace lagtet
