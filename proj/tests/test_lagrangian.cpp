#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lagtetra/lagrangian.hpp"
#include "lagtetra/sampling.hpp"

using namespace lagtet;

namespace {

const cx I{0, 1};

Plucker plucker_from_list(std::array<cx, 6> w) {
  Plucker p;
  p.w = w;
  return p;
}

}  // namespace

TEST_CASE("construction validates independence and isotropy") {
  CubicForm x3{{cx(1, 0), 0, 0, 0}}, y3{{0, 0, 0, cx(1, 0)}};
  CubicForm x2y{{0, cx(1, 0), 0, 0}}, xy2{{0, 0, cx(1, 0), 0}};
  // omega(X^3, Y^3) = 1: not an isotropic plane.
  CHECK_THROWS_AS(Lagrangian(x3, y3), Error);
  // Dependent pair.
  CHECK_THROWS_AS(Lagrangian(x3, cx(2, 0) * x3), Error);
  // Zero form.
  CHECK_THROWS_AS(Lagrangian(x3, CubicForm{}), Error);
  // The three standard representatives are isotropic.
  CHECK_NOTHROW(Lagrangian(x2y, x3 + y3));
  CHECK_NOTHROW(Lagrangian(x3, xy2));
  CHECK_NOTHROW(Lagrangian(x3, x2y));
}

TEST_CASE("plucker coordinates of monomial planes") {
  CubicForm x3{{cx(1, 0), 0, 0, 0}}, x2y{{0, cx(1, 0), 0, 0}};
  Plucker w = plucker_of(x3, x2y);
  std::array<cx, 6> want{cx(1, 0), 0, 0, 0, 0, 0};
  for (int i = 0; i < 6; ++i) CHECK(std::abs(w.w[i] - want[i]) < 1e-15);
  CHECK(w.quadric_residual() < 1e-14);
  CHECK(w.lagrangian_residual() < 1e-14);

  CubicForm y3{{0, 0, 0, cx(1, 0)}};
  Plucker bad = plucker_of(x3, y3);
  // W14 = 1 while W23 = 0: fails isotropy but sits on the quadric.
  CHECK(bad.quadric_residual() < 1e-14);
  CHECK(bad.lagrangian_residual() > 0.1);
}

TEST_CASE("plucker reconstruction round trip and failure modes") {
  Rng rng(211);
  for (Orbit o : {Orbit::Open, Orbit::Intermediate, Orbit::Closed}) {
    for (int i = 0; i < 10; ++i) {
      Lagrangian W = random_lagrangian(rng, o);
      Lagrangian back = lagrangian_from_plucker(W.plucker());
      CHECK(lagrangian_distance(W, back) < 1e-9);
    }
  }
  // Not on the quadric: W12 = W34 = 1, rest 0 gives residual 1.
  CHECK_THROWS_AS(
      lagrangian_from_plucker(plucker_from_list({cx(1, 0), 0, 0, 0, 0, cx(1, 0)})),
      Error);
  // On the quadric but not isotropic: the plane <X^3, Y^3>.
  CHECK_THROWS_AS(
      lagrangian_from_plucker(plucker_from_list({0, 0, cx(1, 0), 0, 0, 0})), Error);
}

TEST_CASE("plucker distance is a projective metric") {
  Rng rng(223);
  Lagrangian W = random_lagrangian(rng, Orbit::Open);
  Plucker w = W.plucker();
  Plucker scaled = w;
  for (auto& v : scaled.w) v *= cx(0, 3);
  CHECK(plucker_distance(w, scaled) < 1e-14);
  Lagrangian V = random_lagrangian(rng, Orbit::Open);
  double d1 = plucker_distance(w, V.plucker());
  double d2 = plucker_distance(V.plucker(), w);
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
  CHECK(d1 >= 0);
}

TEST_CASE("orbit classification of the standard representatives") {
  Tol tol{};
  OrbitClass open = classify_orbit(standard_rep(Orbit::Open));
  CHECK(open.tag == Orbit::Open);
  CHECK_FALSE(open.witness.has_value());
  CHECK(open.multiplicity == 0);

  OrbitClass mid = classify_orbit(standard_rep(Orbit::Intermediate));
  CHECK(mid.tag == Orbit::Intermediate);
  REQUIRE(mid.witness.has_value());
  // <X^3, X Y^2> shares the simple root [0 : 1].
  CHECK(chordal(*mid.witness, ProjPoint::from_affine(0)) < 1e-10);
  CHECK(mid.multiplicity == 1);

  OrbitClass closed = classify_orbit(standard_rep(Orbit::Closed));
  CHECK(closed.tag == Orbit::Closed);
  REQUIRE(closed.witness.has_value());
  CHECK(chordal(*closed.witness, ProjPoint::from_affine(0)) < 1e-10);
  CHECK(closed.multiplicity == 2);
  (void)tol;
}

TEST_CASE("orbit classification is transport invariant") {
  Rng rng(227);
  for (Orbit o : {Orbit::Open, Orbit::Intermediate, Orbit::Closed}) {
    Lagrangian rep = standard_rep(o);
    for (int i = 0; i < 20; ++i) {
      Mobius g = random_mobius(rng);
      Lagrangian moved = transport(sym3(g), rep);
      OrbitClass cls = classify_orbit(moved);
      CHECK(cls.tag == o);
      if (o != Orbit::Open) {
        REQUIRE(cls.witness.has_value());
        // The shared root moves with g.
        CHECK(chordal(*cls.witness, g.apply(ProjPoint::from_affine(0))) < 1e-7);
      }
    }
  }
}

TEST_CASE("pencil double roots of the open representative") {
  Lagrangian W = standard_rep(Orbit::Open);
  auto entries = pencil_double_roots(W);
  REQUIRE(entries.size() == 4);

  double c = std::cbrt(2.0);
  cx s3 = cx(0, std::sqrt(3.0));
  std::vector<std::pair<ProjPoint, ProjPoint>> want{
      {ProjPoint::from_affine(0), ProjPoint::infinity()},
      {ProjPoint::from_affine(c), ProjPoint::from_affine(-1.0 / (c * c))},
      {ProjPoint::from_affine((cx(-1, 0) + s3) / (c * c)),
       ProjPoint::from_affine((cx(1, 0) - s3) / (2.0 * c * c))},
      {ProjPoint::from_affine((cx(-1, 0) - s3) / (c * c)),
       ProjPoint::from_affine((cx(1, 0) + s3) / (2.0 * c * c))}};

  for (const auto& [dr, sr] : want) {
    auto it = std::min_element(entries.begin(), entries.end(),
                               [&](const PencilEntry& x, const PencilEntry& y) {
                                 return chordal(x.double_root, dr) <
                                        chordal(y.double_root, dr);
                               });
    REQUIRE(it != entries.end());
    CHECK(chordal(it->double_root, dr) < 1e-9);
    CHECK(chordal(it->single_root, sr) < 1e-9);
    // The pencil element really does have that double root.
    CubicForm elem = W.element(it->pencil.a, it->pencil.b);
    CHECK(std::abs(elem.eval(it->double_root.normalized())) < 1e-9 * elem.norm());
    CHECK(std::abs(discriminant(elem)) < 1e-9 * sq(elem.norm()));
    entries.erase(it);
  }
}

TEST_CASE("pencil double roots of the intermediate representative") {
  Lagrangian W = standard_rep(Orbit::Intermediate);
  auto entries = pencil_double_roots(W);
  REQUIRE(entries.size() == 1);
  // Only X Y^2 itself is a square times a linear form: pencil [0 : 1] in the
  // basis <X^3, X Y^2>, double root at inf from Y^2, single root 0 from X.
  CHECK(chordal(entries[0].pencil, ProjPoint::from_affine(0)) < 1e-10);
  CHECK(chordal(entries[0].double_root, ProjPoint::infinity()) < 1e-10);
  CHECK(chordal(entries[0].single_root, ProjPoint::from_affine(0)) < 1e-10);
}

TEST_CASE("pencil double roots reject closed planes") {
  CHECK_THROWS_AS(pencil_double_roots(standard_rep(Orbit::Closed)), Error);
}

TEST_CASE("degenerate locus membership") {
  Rng rng(229);
  // The standard degenerate planes share the real root 0: inside K_R,
  // hence outside the Omega domain.
  CHECK(in_KR(standard_rep(Orbit::Intermediate)));
  CHECK(in_KR(standard_rep(Orbit::Closed)));
  CHECK_FALSE(in_Omega(standard_rep(Orbit::Intermediate)));
  CHECK_FALSE(in_Omega(standard_rep(Orbit::Closed)));

  // Open planes never share a root, so they always sit in Omega.
  for (int i = 0; i < 10; ++i) {
    Lagrangian W = random_lagrangian(rng, Orbit::Open);
    CHECK_FALSE(in_KR(W));
    CHECK(in_Omega(W));
  }

  // Shift the shared root to the non-real point i: degenerate yet in Omega.
  Mobius h = Mobius::normalized(cx(1, 0), I, cx(0, 0), cx(1, 0));
  Lagrangian moved = transport(sym3(h), standard_rep(Orbit::Closed));
  CHECK_FALSE(in_KR(moved));
  CHECK(in_Omega(moved));
}

TEST_CASE("veronese planes") {
  ProjPoint t = ProjPoint::from_affine(cx(0.3, -1.2));
  CubicForm v1 = veronese1(t);
  // Cube of the linear form: triple root at t.
  auto roots = cubic_roots(v1);
  for (const ProjPoint& r : roots) CHECK(chordal(r, t) < 1e-8);

  ProjPoint aux1 = ProjPoint::from_affine(cx(2, 1));
  ProjPoint aux2 = ProjPoint::infinity();
  Lagrangian W1 = veronese2(t, aux1);
  Lagrangian W2 = veronese2(t, aux2);
  CHECK(lagrangian_distance(W1, W2) < 1e-10);
  CHECK(classify_orbit(W1).tag == Orbit::Closed);

  CHECK_THROWS_AS(veronese2(t, t), Error);
}

TEST_CASE("minors of a vertex and dual pair match the closed forms") {
  // Plane spanned by (b1 X - a1 Y)^2 (d1 X - c1 Y) and the same for index 2.
  Rng rng(233);
  for (int trial = 0; trial < 10; ++trial) {
    cx a1 = rng.cnormal(), b1 = rng.cnormal(), c1 = rng.cnormal(), d1 = rng.cnormal();
    cx a2 = rng.cnormal(), b2 = rng.cnormal(), c2 = rng.cnormal(), d2 = rng.cnormal();
    ProjPoint v1{a1, b1}, u1{c1, d1}, v2{a2, b2}, u2{c2, d2};
    CubicForm q1 = cubic_from_roots(v1, v1, u1);
    CubicForm q2 = cubic_from_roots(v2, v2, u2);
    Plucker w = plucker_of(q1, q2);

    cx e1 = b1 * b1 * c1 + 2.0 * a1 * b1 * d1;
    cx e2 = b2 * b2 * c2 + 2.0 * a2 * b2 * d2;
    cx f1 = a1 * a1 * d1 + 2.0 * a1 * b1 * c1;
    cx f2 = a2 * a2 * d2 + 2.0 * a2 * b2 * c2;
    std::array<cx, 6> want{
        -b1 * b1 * d1 * e2 + b2 * b2 * d2 * e1,
        b1 * b1 * d1 * f2 - b2 * b2 * d2 * f1,
        -b1 * b1 * d1 * a2 * a2 * c2 + b2 * b2 * d2 * a1 * a1 * c1,
        -e1 * f2 + e2 * f1,
        a2 * a2 * c2 * e1 - a1 * a1 * c1 * e2,
        -a2 * a2 * c2 * f1 + a1 * a1 * c1 * f2};
    double scale = 0;
    for (auto v : want) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < 6; ++i) CHECK(std::abs(w.w[i] - want[i]) < 1e-10 * (1 + scale));
  }
}

TEST_CASE("minors of a cube and mixed-square pair match the closed forms") {
  Rng rng(239);
  for (int trial = 0; trial < 10; ++trial) {
    cx a = rng.cnormal(), b = rng.cnormal(), c = rng.cnormal(), d = rng.cnormal();
    ProjPoint v{a, b}, u{c, d};
    cx k = b * c - a * d;

    // <(bX - aY)^3, (bX - aY)(dX - cY)^2>
    CubicForm cube = cubic_from_roots(v, v, v);
    CubicForm mixed = cubic_from_roots(v, u, u);
    Plucker w = plucker_of(cube, mixed);
    std::array<cx, 6> want{-2.0 * b * b * b * d * k,
                           b * b * (3.0 * a * d + b * c) * k,
                           -b * a * (b * c + a * d) * k,
                           -3.0 * b * a * (b * c + a * d) * k,
                           a * a * (a * d + 3.0 * b * c) * k,
                           -2.0 * a * a * a * c * k};
    double scale = 0;
    for (auto t : want) scale = std::max(scale, std::abs(t));
    for (int i = 0; i < 6; ++i) CHECK(std::abs(w.w[i] - want[i]) < 1e-10 * (1 + scale));

    // <(bX - aY)^3, (bX - aY)^2 (dX - cY)>
    CubicForm sq_lin = cubic_from_roots(v, v, u);
    Plucker z = plucker_of(cube, sq_lin);
    std::array<cx, 6> wantz{-b * b * b * b * k, 2.0 * a * b * b * b * k,
                            -a * a * b * b * k, -3.0 * a * a * b * b * k,
                            2.0 * a * a * a * b * k, -a * a * a * a * k};
    double scalez = 0;
    for (auto t : wantz) scalez = std::max(scalez, std::abs(t));
    for (int i = 0; i < 6; ++i)
      CHECK(std::abs(z.w[i] - wantz[i]) < 1e-10 * (1 + scalez));
  }
}

TEST_CASE("transport acts on plucker classes") {
  Rng rng(241);
  Lagrangian W = random_lagrangian(rng, Orbit::Open);
  Mobius g = random_mobius(rng);
  Lagrangian gW = transport(sym3(g), W);
  Lagrangian back = transport(sym3(g.inverse()), gW);
  CHECK(lagrangian_distance(W, back) < 1e-9);
}
