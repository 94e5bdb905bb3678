#pragma once

#include <cstdint>
#include <string_view>

#include "lagtetra/fibration.hpp"

namespace lagtet {

// Deterministic generator (splitmix64); one global seed, per-purpose streams
// derived by hashing a stream name into the seed.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  double unit();  // [0, 1)
  double uniform(double a, double b);
  double normal();
  cx cnormal();
  int uniform_int(int n);  // 0 .. n-1
};

Rng stream_rng(uint64_t seed, std::string_view name);

Mobius random_mobius(Rng& rng);
Mobius random_real_mobius(Rng& rng);  // real entries, positive determinant
ProjPoint random_point(Rng& rng);

// The model regular tetra {inf, -1, (1 +- sqrt3 i)/2}; barycenter (0, sqrt2).
IdealTetra standard_tetra();

IdealTetra random_regular_tetra(Rng& rng);
DecoratedTetra random_tetra_at_O(Rng& rng, const Tol& tol = {});
DecoratedTetra random_down_at_O(Rng& rng, const Tol& tol = {});

// Standard orbit representatives: Open <X^2 Y, X^3 + Y^3>,
// Intermediate <X^3, X Y^2>, Closed <X^3, X^2 Y>.
Lagrangian standard_rep(Orbit o, const Tol& tol = {});
Lagrangian random_lagrangian(Rng& rng, Orbit o, const Tol& tol = {});

}  // namespace lagtet
