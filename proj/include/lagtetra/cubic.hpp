#pragma once

#include <array>
#include <vector>

#include "lagtetra/projective.hpp"

namespace lagtet {

// Binary cubic form  c0 X^3 + c1 X^2 Y + c2 X Y^2 + c3 Y^3.
struct CubicForm {
  std::array<cx, 4> c{};

  cx operator[](int i) const { return c[i]; }
  cx& operator[](int i) { return c[i]; }

  double norm() const;
  CubicForm normalized() const;  // unit coefficient norm; ZeroForm if zero
  cx eval(const ProjPoint& p) const;

  // Gradient (dP/dX, dP/dY) evaluated homogeneously; used for simple-root
  // detection and Newton polishing.
  std::array<cx, 2> gradient(const ProjPoint& p) const;
};

CubicForm operator+(const CubicForm& p, const CubicForm& q);
CubicForm operator*(cx s, const CubicForm& p);

// Product of three linear forms (b_i X - a_i Y) for roots [a_i : b_i].
CubicForm cubic_from_roots(const ProjPoint& r1, const ProjPoint& r2,
                           const ProjPoint& r3);

// The linear form (b X - a Y) vanishing at [a : b], as a degree-1
// coefficient pair.
std::array<cx, 2> linear_form(const ProjPoint& r);

// Symplectic pairing on the 4-dimensional space of cubics, normalized by
// omega(X^3, Y^3) = 1 and omega(X^2 Y, X Y^2) = -1/3.
cx omega(const CubicForm& p, const CubicForm& q);

// Gram matrix of omega in the monomial basis.
std::array<std::array<cx, 4>, 4> omega_gram();

// Discriminant of the cubic; vanishes exactly at repeated roots.
cx discriminant(const CubicForm& p);

// Resultant of two cubics (6x6 Sylvester determinant); vanishes exactly
// when they share a root.
cx resultant(const CubicForm& p, const CubicForm& q);

// All roots in CP^1 with multiplicity (always 3 entries, degenerate-chart
// aware, clustered at tol.cluster, canonically sorted). ZeroForm if p = 0.
std::vector<ProjPoint> cubic_roots(const CubicForm& p, const Tol& tol = {});

// Roots of a general homogeneous polynomial sum coeff[i] X^(n-i) Y^i,
// unclustered, via companion matrix plus chart-adaptive Newton polish.
std::vector<ProjPoint> homogeneous_roots(const std::vector<cx>& coeff,
                                         const Tol& tol = {});

// The double root of a cubic that is (numerically) a perfect square times a
// linear form. Exact rational formula, O(eps) accurate near the degenerate
// locus. DomainError if the cubic is too close to a perfect cube.
ProjPoint double_root_of(const CubicForm& p);

// True when p is close to the cube of a linear form (Hessian nearly zero),
// relative threshold eps on the Hessian coefficients.
bool is_near_cube(const CubicForm& p, double eps = 1e-4);

// Divide out a known root once (synthetic division in the better chart).
std::array<cx, 3> deflate(const CubicForm& p, const ProjPoint& root);

// Coefficients (e0..e4) of the quartic disc(a p1 + b p2) in [a : b],
// e_k multiplying a^(4-k) b^k. Computed by symbolic convolution.
std::array<cx, 5> pencil_discriminant(const CubicForm& p1, const CubicForm& p2);

// One Newton step refinement of a simple root, chart adaptive.
ProjPoint polish_root(const CubicForm& p, ProjPoint r, int steps = 3);

}  // namespace lagtet
