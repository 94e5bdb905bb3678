#pragma once

#include <variant>

#include "lagtetra/halfspace.hpp"
#include "lagtetra/lagrangian.hpp"

namespace lagtet {

// Ideal tetrahedron given by its four boundary vertices.
struct IdealTetra {
  std::array<ProjPoint, 4> v;
};

// Shape invariant: the cross ratio of the vertices, canonicalized to the
// lower half plane representative (orderings of a tetra realize a value and
// its reciprocal-conjugate pair; regular tetra map to (1 - sqrt3 i)/2).
cx shape_invariant(const IdealTetra& T, const Tol& tol = {});

// The canonical regular shape value (1 - sqrt3 i)/2.
cx regular_shape();

bool is_regular(const IdealTetra& T, double eps = 1e-8);

// Hyperbolic barycenter of a regular ideal tetrahedron (the fixed point of
// its orientation-preserving symmetries). NotRegular when no vertex ordering
// matches the regular model.
H3Interior barycenter(const IdealTetra& T, const Tol& tol = {});

// Regular tetra with the antipodal image of each vertex through the
// barycenter attached, index aligned: dual[i] = antipode(bary, v[i]).
struct DecoratedTetra {
  IdealTetra tetra;
  std::array<ProjPoint, 4> dual;
  H3Interior bary;
};

DecoratedTetra dual_tetra(const IdealTetra& T, const Tol& tol = {});

// Degenerate tetra datum: a point with multiplicity, plus the residual
// point. first == second is the fully collapsed (diagonal) case.
struct DegenTetra {
  ProjPoint first;
  ProjPoint second;

  bool diagonal(double eps = 1e-6) const { return chordal(first, second) <= eps; }
};

using TetraOrDegen = std::variant<DecoratedTetra, DegenTetra>;

// The correspondence sending a decorated tetra to the plane spanned by the
// cubics l_v^2 l_v* over its vertex/antipode pairs, and a degenerate tetra
// to the matching boundary plane.
Lagrangian g_map(const DecoratedTetra& T, const Tol& tol = {});
Lagrangian g_map(const DegenTetra& D, const Tol& tol = {});

// Inverse correspondence from a plane to a decorated or degenerate tetra.
TetraOrDegen g_inverse(const Lagrangian& W, const Tol& tol = {});

// Equivariant projection to compactified H^3: barycenter for Open planes,
// shared-root boundary point for degenerate ones.
H3Point project_Q(const Lagrangian& W, const Tol& tol = {});

// Distance from the barycenter to the face spanned by the three vertices
// other than v[opposite]. ln(sqrt 2) for every regular tetra.
double face_distance(const DecoratedTetra& T, int opposite, const Tol& tol = {});

DecoratedTetra reflect_iota(const DecoratedTetra& T);
DegenTetra reflect_iota(const DegenTetra& D);

// Moebius transport of the full decoration.
DecoratedTetra transport(const Mobius& g, const DecoratedTetra& T);

}  // namespace lagtet
