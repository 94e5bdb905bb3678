#pragma once

#include <optional>
#include <vector>

#include "lagtetra/cubic.hpp"

namespace lagtet {

// Plucker coordinates of a plane in the space of cubics, component order
// (W12, W13, W14, W23, W24, W34) built from 2x2 minors of the 4x2
// coefficient matrix of a basis.
struct Plucker {
  std::array<cx, 6> w{};

  double norm() const;
  // Residual of the quadric relation W12 W34 - W13 W24 + W14 W23 = 0,
  // relative to norm^2.
  double quadric_residual() const;
  // Residual of the isotropy condition W14 - W23/3 = 0, relative to norm.
  double lagrangian_residual() const;
};

Plucker plucker_of(const CubicForm& p1, const CubicForm& p2);

// Projective distance between Plucker vectors: the phase-aligned normalized
// difference, equal to 2 sin(angle/2). Stable for nearby points.
double plucker_distance(const Plucker& p, const Plucker& q);

// A 2-plane of binary cubics, isotropic for omega. Stores a basis and its
// Plucker vector. Construction validates independence and isotropy.
class Lagrangian {
 public:
  Lagrangian(const CubicForm& p1, const CubicForm& p2, const Tol& tol = {});

  const CubicForm& basis1() const { return p1_; }
  const CubicForm& basis2() const { return p2_; }
  const Plucker& plucker() const { return w_; }

  CubicForm element(cx s, cx t) const;  // s basis1 + t basis2

 private:
  CubicForm p1_, p2_;
  Plucker w_;
};

// Recover a Lagrangian from its Plucker vector. NotOnQuadric when the
// quadric relation fails, NotLagrangian when isotropy fails.
Lagrangian lagrangian_from_plucker(const Plucker& w, const Tol& tol = {});

double lagrangian_distance(const Lagrangian& a, const Lagrangian& b);

// Transport by a projective transformation: basis-wise sym3 action.
Lagrangian transport(const Sym3Matrix& S, const Lagrangian& W, const Tol& tol = {});

enum class Orbit { Open, Intermediate, Closed };

const char* orbit_name(Orbit o);

// Classification of the group orbit of a Lagrangian plane, with a witness
// point for the degenerate orbits: the root every element of the plane
// shares, of the stated multiplicity (2 for Closed, 1 for Intermediate).
struct OrbitClass {
  Orbit tag = Orbit::Open;
  std::optional<ProjPoint> witness;
  int multiplicity = 0;
};

OrbitClass classify_orbit(const Lagrangian& W, const Tol& tol = {});

// One pencil element with a repeated root: pencil parameter [s : t] for
// s basis1 + t basis2, its double root and the complementary simple root.
struct PencilEntry {
  ProjPoint pencil;
  ProjPoint double_root;
  ProjPoint single_root;
};

// The pencil elements that are a square times a linear form. Open planes
// yield exactly four; Intermediate yield one; Closed planes have identically
// vanishing pencil discriminant and raise NumericalDegeneracy.
std::vector<PencilEntry> pencil_double_roots(const Lagrangian& W, const Tol& tol = {});

// Degenerate-orbit membership tests. K_R is the subset of degenerate planes
// whose shared root is a real point.
bool in_KR(const Lagrangian& W, const Tol& tol = {});
bool in_Omega(const Lagrangian& W, const Tol& tol = {});

// Cube of the linear form vanishing at t.
CubicForm veronese1(const ProjPoint& t);

// The Closed-orbit plane spanned by l_t^3 and l_t^2 l_aux; independent of
// the auxiliary point as a plane.
Lagrangian veronese2(const ProjPoint& t, const ProjPoint& aux, const Tol& tol = {});

}  // namespace lagtet
