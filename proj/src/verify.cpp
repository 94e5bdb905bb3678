#include "lagtetra/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "lagtetra/topology.hpp"

namespace lagtet {

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0) || !(cfg.tol < cfg.cluster) || !(cfg.cluster < 1e-3))
    fail(Err::DomainError, "need 0 < tol < cluster tolerance < 1e-3");
  if (cfg.samples <= 0) fail(Err::DomainError, "samples must be positive");
}

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct Ctx {
  const RunConfig& cfg;
  SuiteResult& out;

  void check(const std::string& name, const std::function<double()>& worst_of,
             double bound) {
    CheckResult r{name, false, ""};
    try {
      double w = worst_of();
      r.pass = w <= bound;
      std::ostringstream os;
      os << "worst " << w << " bound " << bound;
      r.detail = os.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.checks.push_back(r);
  }

  void check_true(const std::string& name, const std::function<bool()>& f) {
    CheckResult r{name, false, ""};
    try {
      r.pass = f();
      r.detail = r.pass ? "ok" : "predicate failed";
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out.checks.push_back(r);
  }
};

void suite_projective(Ctx& c) {
  const RunConfig& cfg = c.cfg;
  c.check("cross ratio normalization", [&] {
    Rng rng = stream_rng(cfg.seed, "projective.cr");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      cx z = rng.cnormal();
      cx r = cross_ratio(ProjPoint::infinity(), ProjPoint::from_affine(0),
                         ProjPoint::from_affine(1), ProjPoint::from_affine(z));
      w = std::max(w, std::abs(r - z));
    }
    return w;
  }, 1e-12);

  c.check("triple map hits its targets", [&] {
    Rng rng = stream_rng(cfg.seed, "projective.triple");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      std::array<ProjPoint, 3> src{random_point(rng), random_point(rng),
                                   random_point(rng)};
      std::array<ProjPoint, 3> dst{random_point(rng), random_point(rng),
                                   random_point(rng)};
      bool ok = true;
      for (int a = 0; a < 3 && ok; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (chordal(src[a], src[b]) < 1e-3 || chordal(dst[a], dst[b]) < 1e-3) {
            ok = false;
            break;
          }
      if (!ok) continue;
      Mobius g = mobius_fixing_triple(src, dst);
      for (int k = 0; k < 3; ++k) w = std::max(w, chordal(g.apply(src[k]), dst[k]));
    }
    return w;
  }, 1e-9);

  c.check("sym3 is a homomorphism", [&] {
    Rng rng = stream_rng(cfg.seed, "projective.sym3hom");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      Mobius g = random_mobius(rng), h = random_mobius(rng);
      Sym3Matrix lhs = sym3(g * h);
      Sym3Matrix a = sym3(g), b = sym3(h);
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          cx acc = 0;
          for (int k = 0; k < 4; ++k) acc += a.m[r][k] * b.m[k][s];
          w = std::max(w, std::abs(acc - lhs.m[r][s]));
        }
    }
    return w;
  }, 1e-8);

  c.check("sym3 transports roots", [&] {
    Rng rng = stream_rng(cfg.seed, "projective.sym3root");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      Mobius g = random_mobius(rng);
      ProjPoint r1 = random_point(rng), r2 = random_point(rng), r3 = random_point(rng);
      if (chordal(r1, r2) < 1e-3 || chordal(r1, r3) < 1e-3 || chordal(r2, r3) < 1e-3)
        continue;
      CubicForm p = cubic_from_roots(r1, r2, r3);
      CubicForm q{sym3(g).apply(p.c)};
      for (const auto& r : {r1, r2, r3}) {
        ProjPoint gr = g.apply(r);
        double v = std::abs(q.eval(gr)) / (q.norm());
        w = std::max(w, v);
      }
    }
    return w;
  }, 1e-9);

  c.check("sym3 preserves the symplectic pairing", [&] {
    Rng rng = stream_rng(cfg.seed, "projective.sym3omega");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      Mobius g = random_mobius(rng);
      CubicForm p, q;
      for (int k = 0; k < 4; ++k) {
        p.c[k] = rng.cnormal();
        q.c[k] = rng.cnormal();
      }
      cx before = omega(p, q);
      cx after = omega(CubicForm{sym3(g).apply(p.c)}, CubicForm{sym3(g).apply(q.c)});
      w = std::max(w, std::abs(before - after) / std::max(1.0, std::abs(before)));
    }
    return w;
  }, 1e-7);
}

void suite_symplectic(Ctx& c) {
  const RunConfig& cfg = c.cfg;
  Tol tol = cfg.tolerances();

  c.check_true("orbit representatives classify correctly", [&] {
    return classify_orbit(standard_rep(Orbit::Open, tol), tol).tag == Orbit::Open &&
           classify_orbit(standard_rep(Orbit::Intermediate, tol), tol).tag ==
               Orbit::Intermediate &&
           classify_orbit(standard_rep(Orbit::Closed, tol), tol).tag == Orbit::Closed;
  });

  c.check_true("classification is a transport invariant", [&] {
    Rng rng = stream_rng(cfg.seed, "symplectic.transport");
    // Ill-conditioned translates the classifier refuses (resultant in the
    // ambiguous band) are resampled: a refusal is not a misclassification.
    // The quota must still be met, so refusals cannot mask a defect.
    const Orbit orbits[3] = {Orbit::Open, Orbit::Intermediate, Orbit::Closed};
    int want = 3 * (cfg.samples / 3 + 1), done = 0, tries = 0;
    while (done < want && tries < 20 * want) {
      ++tries;
      Orbit o = orbits[done % 3];
      try {
        if (classify_orbit(random_lagrangian(rng, o, tol), tol).tag != o)
          return false;
      } catch (const Error& e) {
        if (e.code != Err::NumericalDegeneracy) throw;
        continue;
      }
      ++done;
    }
    return done == want;
  });

  c.check("degenerate witnesses are the transported base points", [&] {
    Rng rng = stream_rng(cfg.seed, "symplectic.witness");
    double w = 0;
    int done = 0, tries = 0;
    while (done < cfg.samples && tries < 20 * cfg.samples) {
      ++tries;
      Mobius g = random_mobius(rng);
      try {
        // Closed rep shares the double root [0:1]; Intermediate shares [0:1].
        for (Orbit o : {Orbit::Closed, Orbit::Intermediate}) {
          Lagrangian W = transport(sym3(g), standard_rep(o, tol), tol);
          OrbitClass cls = classify_orbit(W, tol);
          if (!cls.witness) return 1.0;
          ProjPoint expect = g.apply(ProjPoint{0, 1});
          w = std::max(w, chordal(*cls.witness, expect));
        }
      } catch (const Error& e) {
        if (e.code != Err::NumericalDegeneracy) throw;
        continue;
      }
      ++done;
    }
    return done == cfg.samples ? w : 1.0;
  }, 1e-9);

  c.check("veronese planes are Closed over their base point", [&] {
    Rng rng = stream_rng(cfg.seed, "symplectic.veronese");
    double w = 0;
    int done = 0, tries = 0;
    while (done < cfg.samples && tries < 20 * cfg.samples) {
      ++tries;
      ProjPoint t = random_point(rng), aux = random_point(rng);
      if (chordal(t, aux) < 1e-3) continue;
      try {
        Lagrangian W = veronese2(t, aux, tol);
        OrbitClass cls = classify_orbit(W, tol);
        if (cls.tag != Orbit::Closed || cls.multiplicity != 2) return 1.0;
        w = std::max(w, chordal(*cls.witness, t));
      } catch (const Error& e) {
        if (e.code != Err::NumericalDegeneracy) throw;
        continue;
      }
      ++done;
    }
    return done == cfg.samples ? w : 1.0;
  }, 1e-9);

  c.check("plucker roundtrip", [&] {
    Rng rng = stream_rng(cfg.seed, "symplectic.plucker");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      Lagrangian W = random_lagrangian(rng, Orbit::Open, tol);
      Lagrangian back = lagrangian_from_plucker(W.plucker(), tol);
      w = std::max(w, lagrangian_distance(W, back));
    }
    return w;
  }, 1e-9);
}

void suite_hyperbolic(Ctx& c) {
  const RunConfig& cfg = c.cfg;

  c.check("extension is an isometry", [&] {
    Rng rng = stream_rng(cfg.seed, "hyperbolic.isometry");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      Mobius g = random_mobius(rng);
      H3Interior p{rng.cnormal(), std::exp(rng.uniform(-2, 2))};
      H3Interior q{rng.cnormal(), std::exp(rng.uniform(-2, 2))};
      double before = h3_distance(p, q);
      double after = h3_distance(poincare_extend(g, p), poincare_extend(g, q));
      w = std::max(w, std::abs(before - after));
    }
    return w;
  }, 1e-8);

  c.check("axis coordinate roundtrip", [&] {
    Rng rng = stream_rng(cfg.seed, "hyperbolic.axis");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      double s = rng.uniform(-6, 6);
      w = std::max(w, std::abs(eta(eta_inv(s)) - s));
    }
    return w;
  }, 1e-9);

  c.check("axis translation shifts boundary heights", [&] {
    Rng rng = stream_rng(cfg.seed, "hyperbolic.height");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      ProjPoint v = random_point(rng);
      double lam = rng.uniform(-3, 3);
      double h0 = height(v);
      if (!std::isfinite(h0) || std::abs(h0) > 6) continue;
      w = std::max(w, std::abs(height(axis_translate(lam).apply(v)) - h0 - lam));
    }
    return w;
  }, 1e-9);

  c.check("translation length along the axis", [&] {
    Rng rng = stream_rng(cfg.seed, "hyperbolic.translength");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      double s = rng.uniform(-4, 4), lam = rng.uniform(-3, 3);
      H3Interior p = eta_inv(s);
      w = std::max(w, std::abs(eta(poincare_extend(axis_translate(lam), p)) - s - lam));
    }
    return w;
  }, 1e-9);

  c.check("reflection fixes the projection plane", [&] {
    Rng rng = stream_rng(cfg.seed, "hyperbolic.iota");
    double w = 0;
    for (int i = 0; i < cfg.samples; ++i) {
      H3Interior p{rng.cnormal(), std::exp(rng.uniform(-2, 2))};
      H2Point a = project_to_P(H3Point{p});
      H2Point b = project_to_P(H3Point{reflect_iota(p)});
      w = std::max(w, std::abs(a.x - b.x) + std::abs(a.h - b.h));
      // iota is an isometry of the half space.
      H3Interior q{rng.cnormal(), std::exp(rng.uniform(-2, 2))};
      w = std::max(w, std::abs(h3_distance(p, q) -
                               h3_distance(reflect_iota(p), reflect_iota(q))));
    }
    return w;
  }, 1e-10);
}

void suite_tetra(Ctx& c) {
  const RunConfig& cfg = c.cfg;
  Tol tol = cfg.tolerances();

  c.check("model barycenter", [&] {
    H3Interior b = barycenter(standard_tetra(), tol);
    return std::abs(b.z) + std::abs(b.t - std::sqrt(2.0));
  }, 1e-10);

  c.check("roundtrip through the correspondence", [&] {
    Rng rng = stream_rng(cfg.seed, "tetra.roundtrip");
    double w = 0;
    int done = 0, tries = 0;
    while (done < cfg.samples && tries < 20 * cfg.samples) {
      ++tries;
      try {
        DecoratedTetra T = dual_tetra(random_regular_tetra(rng), tol);
        Lagrangian W = g_map(T, tol);
        Lagrangian back = g_map(std::get<DecoratedTetra>(g_inverse(W, tol)), tol);
        w = std::max(w, lagrangian_distance(W, back));
      } catch (const Error& e) {
        if (e.code != Err::NumericalDegeneracy) throw;
        continue;
      }
      ++done;
    }
    return done == cfg.samples ? w : 1.0;
  }, 1e-8);

  c.check("projection is equivariant", [&] {
    Rng rng = stream_rng(cfg.seed, "tetra.equivariant");
    double w = 0;
    int done = 0, tries = 0;
    while (done < cfg.samples && tries < 20 * cfg.samples) {
      ++tries;
      Mobius g = random_mobius(rng);
      try {
        Lagrangian W = random_lagrangian(rng, Orbit::Open, tol);
        H3Point lhs = project_Q(transport(sym3(g), W, tol), tol);
        H3Point rhs = poincare_extend(g, project_Q(W, tol));
        H3Interior a = lhs.as_interior(), b = rhs.as_interior();
        w = std::max(w, h3_distance(a, b));
      } catch (const Error& e) {
        if (e.code != Err::NumericalDegeneracy) throw;
        continue;
      }
      ++done;
    }
    return done == cfg.samples ? w : 1.0;
  }, 1e-8);

  c.check("face distances are ln sqrt 2", [&] {
    Rng rng = stream_rng(cfg.seed, "tetra.face");
    double w = 0;
    double expect = 0.5 * std::log(2.0);
    for (int i = 0; i < cfg.samples / 4 + 1; ++i) {
      DecoratedTetra T = dual_tetra(random_regular_tetra(rng), tol);
      for (int k = 0; k < 4; ++k)
        w = std::max(w, std::abs(face_distance(T, k, tol) - expect));
    }
    return w;
  }, 1e-9);

  c.check("degenerating tetra approach their boundary planes", [&] {
    double prev = 1e9;
    double w = 0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
      cx zp(0.5, std::sqrt(3.0) / 2.0), zm(0.5, -std::sqrt(3.0) / 2.0);
      DecoratedTetra T = dual_tetra(
          IdealTetra{{ProjPoint::infinity(), ProjPoint::from_affine(-eps),
                      ProjPoint::from_affine(eps * zp), ProjPoint::from_affine(eps * zm)}},
          {1e-12, 1e-8});
      Lagrangian W = g_map(T, {1e-12, 1e-8});
      Lagrangian limit = standard_rep(Orbit::Intermediate);
      double d = lagrangian_distance(W, limit);
      if (d > prev + 1e-12) return 1.0;
      prev = d;
      w = d;
    }
    return w;
  }, 1e-3);
}

void suite_fibration(Ctx& c) {
  const RunConfig& cfg = c.cfg;
  Tol tol = cfg.tolerances();

  // Samples whose vertex lands on the splitting level, or whose translate
  // the classifier refuses, are resampled under the same quota rule as the
  // symplectic suite.
  c.check("down coordinate roundtrip", [&] {
    Rng rng = stream_rng(cfg.seed, "fibration.coord");
    double w = 0;
    int done = 0, tries = 0;
    while (done < cfg.samples && tries < 20 * cfg.samples) {
      ++tries;
      try {
        DecoratedTetra T = random_down_at_O(rng, tol);
        UpDownClass ud = updown_classify(T, tol);
        if (ud.kind != UpDown::Down) return 1.0;
        DecoratedTetra R = make_down_tetra(0.0, *ud.coord, tol);
        for (int k = 0; k < 4; ++k) {
          double best = 2;
          for (int l = 0; l < 4; ++l)
            best = std::min(best, chordal(T.tetra.v[k], R.tetra.v[l]));
          w = std::max(w, best);
        }
      } catch (const Error& e) {
        if (e.code != Err::AmbiguousBoundary && e.code != Err::NumericalDegeneracy)
          throw;
        continue;
      }
      ++done;
    }
    return done == cfg.samples ? w : 1.0;
  }, 1e-9);

  c.check("flow preserves the fiber", [&] {
    Rng rng = stream_rng(cfg.seed, "fibration.fiber");
    double w = 0;
    int n = std::max(10, cfg.samples / 5);
    int done = 0, tries = 0;
    while (done < n && tries < 20 * n) {
      ++tries;
      DecoratedTetra T = rng.unit() < 0.5 ? random_tetra_at_O(rng, tol)
                                          : random_down_at_O(rng, tol);
      double s = rng.uniform(-5, 5);
      try {
        FiberPoint p = phi(T, ExtReal::finite(s), tol);
        H2Point pr = project_to_P(H3Point{p.tetra->bary}, tol);
        w = std::max(w, h2_distance(pr, {0, 1}));
      } catch (const Error& e) {
        if (e.code != Err::AmbiguousBoundary && e.code != Err::NumericalDegeneracy)
          throw;
        continue;
      }
      ++done;
    }
    return done == n ? w : 1.0;
  }, 1e-7);

  c.check("flow moves the barycenter level by s", [&] {
    Rng rng = stream_rng(cfg.seed, "fibration.level");
    double w = 0;
    int n = std::max(10, cfg.samples / 5);
    int done = 0, tries = 0;
    while (done < n && tries < 20 * n) {
      ++tries;
      DecoratedTetra T = rng.unit() < 0.5 ? random_tetra_at_O(rng, tol)
                                          : random_down_at_O(rng, tol);
      double s = rng.uniform(-5, 5);
      try {
        FiberPoint p = phi(T, ExtReal::finite(s), tol);
        w = std::max(w, std::abs(eta(p.tetra->bary) - s));
      } catch (const Error& e) {
        if (e.code != Err::AmbiguousBoundary && e.code != Err::NumericalDegeneracy)
          throw;
        continue;
      }
      ++done;
    }
    return done == n ? w : 1.0;
  }, 1e-7);

  c.check("infinite limits land on the sampled boundary point", [&] {
    Rng rng = stream_rng(cfg.seed, "fibration.limits");
    double w = 0;
    int n = std::max(4, cfg.samples / 10);
    int done = 0, tries = 0;
    while (done < n && tries < 20 * n) {
      ++tries;
      ProjPoint z = random_point(rng);
      if (chordal(z, ProjPoint::from_affine(cx(0, 1))) < 1e-2) continue;
      try {
        auto reps = phi_fiber(z, 3, tol);
        for (const auto& T : reps) {
          FiberPoint limit = phi(T, ExtReal::plus_inf(), tol);
          w = std::max(w, chordal(*limit.second, z));
        }
      } catch (const Error& e) {
        if (e.code != Err::AmbiguousBoundary && e.code != Err::NumericalDegeneracy)
          throw;
        continue;
      }
      ++done;
    }
    return done == n ? w : 1.0;
  }, 1e-8);

  c.check_true("half-plane projection stays equivariant on samples", [&] {
    Rng rng = stream_rng(cfg.seed, "fibration.project");
    int n = std::max(10, cfg.samples / 5);
    int done = 0, tries = 0;
    while (done < n && tries < 20 * n) {
      ++tries;
      Mobius g = random_real_mobius(rng);
      try {
        Lagrangian W = random_lagrangian(rng, Orbit::Open, tol);
        H2Point lhs = project_q(transport(sym3(g), W, tol), tol);
        H2Point rhs0 = project_q(W, tol);
        cx img = g.apply_affine(cx(rhs0.x, rhs0.h));
        if (h2_distance(lhs, {img.real(), img.imag()}) > 1e-7) return false;
      } catch (const Error& e) {
        if (e.code != Err::NumericalDegeneracy) throw;
        continue;
      }
      ++done;
    }
    return done == n;
  });
}

void suite_topology(Ctx& c) {
  c.check_true("kernel lattice has index three", [&] {
    auto k = topo::mv_kernel();
    return k.index == 3 && std::abs(k.change_det) == 1 &&
           k.basis[0][0] == 2 && k.basis[0][1] == 1 && k.basis[1][0] == 1 &&
           k.basis[1][1] == 2;
  });

  c.check_true("cohomology table", [&] {
    auto b = topo::betti_assemble();
    return b.H[0].name() == "Z" && b.H[1].name() == "0" && b.H[2].name() == "Z^2" &&
           b.H[3].name() == "0" && b.H[4].name() == "Z" && b.euler == 4;
  });

  c.check_true("intersection system solves exactly", [&] {
    auto s = topo::intersection_form_solve();
    return s.det == 27 && s.solution[0] == topo::Rat(1, 3) &&
           s.solution[1] == topo::Rat(-1, 3) && s.solution[2] == 0;
  });

  c.check_true("unimodular parameters", [&] {
    auto qs = topo::unimodular_q_candidates();
    return qs.size() == 2 && qs[0] == 3 && qs[1] == -3;
  });

  c.check_true("candidate forms classify as the odd connected sum", [&] {
    for (long q : topo::unimodular_q_candidates()) {
      auto f = topo::classify_form(topo::form_at(q));
      if (f.rank != 2 || f.signature != 0 || f.even || f.definite) return false;
      if (f.model != "CP^2 # conj CP^2") return false;
    }
    return true;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "projective", "symplectic", "hyperbolic", "tetra", "fibration", "topology"};
  return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  validate(cfg);
  SuiteResult out{name, {}};
  Ctx ctx{cfg, out};
  if (name == "projective") suite_projective(ctx);
  else if (name == "symplectic") suite_symplectic(ctx);
  else if (name == "hyperbolic") suite_hyperbolic(ctx);
  else if (name == "tetra") suite_tetra(ctx);
  else if (name == "fibration") suite_fibration(ctx);
  else if (name == "topology") suite_topology(ctx);
  else fail(Err::DomainError, "unknown suite: " + name);
  return out;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const auto& n : names) out.push_back(run_suite(n, cfg));
  return out;
}

}  // namespace lagtet
