#include "lagtetra/sampling.hpp"

#include <cmath>

namespace lagtet {

uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * unit(); }

double Rng::normal() {
  // Box-Muller; fresh pair each call keeps the stream simple.
  double u1 = unit(), u2 = unit();
  while (u1 <= 0) u1 = unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi() * u2);
}

cx Rng::cnormal() {
  double u1 = unit(), u2 = unit();
  while (u1 <= 0) u1 = unit();
  double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * pi() * u2), r * std::sin(2.0 * pi() * u2)};
}

int Rng::uniform_int(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

Rng stream_rng(uint64_t seed, std::string_view name) {
  uint64_t h = 1469598103934665603ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return Rng(seed ^ h);
}

Mobius random_mobius(Rng& rng) {
  for (;;) {
    cx a = rng.cnormal(), b = rng.cnormal(), c = rng.cnormal(), d = rng.cnormal();
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (std::abs(a * d - b * c) > 0.1 * sq(scale))
      return Mobius::normalized(a, b, c, d);
  }
}

Mobius random_real_mobius(Rng& rng) {
  for (;;) {
    double a = rng.normal(), b = rng.normal(), c = rng.normal(), d = rng.normal();
    double det = a * d - b * c;
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (det > 0.1 * sq(scale))
      return Mobius::normalized(cx(a, 0), cx(b, 0), cx(c, 0), cx(d, 0));
  }
}

ProjPoint random_point(Rng& rng) {
  for (;;) {
    cx a = rng.cnormal(), b = rng.cnormal();
    if (sq(std::abs(a)) + sq(std::abs(b)) > 0.01) return ProjPoint{a, b}.normalized();
  }
}

IdealTetra standard_tetra() {
  double s = std::sqrt(3.0) / 2.0;
  return {{ProjPoint::infinity(), ProjPoint::from_affine(cx(-1, 0)),
           ProjPoint::from_affine(cx(0.5, s)), ProjPoint::from_affine(cx(0.5, -s))}};
}

IdealTetra random_regular_tetra(Rng& rng) {
  Mobius g = random_mobius(rng);
  IdealTetra T = standard_tetra();
  for (auto& v : T.v) v = g.apply(v).normalized();
  return T;
}

DecoratedTetra random_tetra_at_O(Rng& rng, const Tol& tol) {
  DecoratedTetra D = dual_tetra(random_regular_tetra(rng), tol);
  double rt = std::sqrt(D.bary.t);
  Mobius K = Mobius::raw(cx(1.0 / rt, 0), -D.bary.z / rt, 0, cx(rt, 0));
  return transport(K, D);
}

DecoratedTetra random_down_at_O(Rng& rng, const Tol& tol) {
  double h = rng.uniform(eta_B_O() - 4.0, eta_B_O() - 0.05);
  double phi_angle = rng.uniform(0, 2.0 * pi());
  ProjPoint v = chart_m().inverse().apply(
      ProjPoint::from_affine(std::exp(h) * std::exp(cx(0, phi_angle))));
  double theta = rng.uniform(0, 2.0 * pi() / 3.0);
  return make_down_tetra(0.0, DownCoord{v.normalized(), theta}, tol);
}

Lagrangian standard_rep(Orbit o, const Tol& tol) {
  CubicForm x3{{cx(1, 0), 0, 0, 0}};
  CubicForm x2y{{0, cx(1, 0), 0, 0}};
  CubicForm xy2{{0, 0, cx(1, 0), 0}};
  CubicForm x3y3{{cx(1, 0), 0, 0, cx(1, 0)}};
  switch (o) {
    case Orbit::Open: return Lagrangian(x2y, x3y3, tol);
    case Orbit::Intermediate: return Lagrangian(x3, xy2, tol);
    case Orbit::Closed: return Lagrangian(x3, x2y, tol);
  }
  fail(Err::DomainError, "unreachable");
}

Lagrangian random_lagrangian(Rng& rng, Orbit o, const Tol& tol) {
  return transport(sym3(random_mobius(rng)), standard_rep(o, tol), tol);
}

}  // namespace lagtet
