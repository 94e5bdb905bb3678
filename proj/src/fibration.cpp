#include "lagtetra/fibration.hpp"

#include <cmath>

namespace lagtet {

namespace {

const cx I{0, 1};

// Chart adapted to a vertex/antipode/center triple: v -> 0, v* -> inf,
// c -> (0, 1). The boundary circle of the down tetra becomes |w| = sqrt 2.
Mobius norm_chart(const ProjPoint& v, const ProjPoint& vstar, const H3Interior& c) {
  auto lv = linear_form(v);
  auto ls = linear_form(vstar);
  Mobius n0 = Mobius::normalized(lv[0], lv[1], ls[0], ls[1]);
  H3Interior x = poincare_extend(n0, c);
  if (std::abs(x.z) > 1e-6 * x.t)
    fail(Err::NumericalDegeneracy, "center is off the vertex axis in the chart");
  double rt = std::sqrt(x.t);
  return Mobius::raw(cx(1.0 / rt, 0), 0, 0, cx(rt, 0)) * n0;
}

// Unit reference direction in the chart: image of -i, falling back to +i
// and then to 1 when the image degenerates.
cx chart_reference(const Mobius& n) {
  for (cx probe : {cx(0, -1), cx(0, 1), cx(1, 0)}) {
    ProjPoint w = n.apply(ProjPoint::from_affine(probe));
    double na = std::abs(w.a), nb = std::abs(w.b);
    if (nb > 1e-9 * na && na > 1e-9 * nb) return (w.a / w.b) / std::abs(w.a / w.b);
  }
  fail(Err::NumericalDegeneracy, "no usable reference direction in the chart");
}

constexpr double theta_period() { return 2.0 * pi() / 3.0; }

double canonical_theta(double t) {
  double p = theta_period();
  t = std::fmod(t, p);
  if (t < 0) t += p;
  if (t > p - 1e-12) t = 0;
  return t;
}

// Angle of the high-vertex triple against the chart reference, measured via
// the cubed-phase product so the 2 pi / 3 rotation ambiguity drops out.
double theta_in_chart(const Mobius& n, const std::array<ProjPoint, 3>& high,
                      cx ref, int sign) {
  cx prod{1, 0};
  for (const auto& u : high) {
    ProjPoint w = n.apply(u);
    cx a = w.a / w.b;
    double r = std::abs(a);
    if (!(r > 0) || !std::isfinite(r))
      fail(Err::NumericalDegeneracy, "high vertex degenerates in the chart");
    if (std::abs(r - std::sqrt(2.0)) > 1e-5 * std::sqrt(2.0))
      fail(Err::NumericalDegeneracy, "high vertex is off the model circle");
    prod *= a / r;
  }
  cx base = cx(sign, 0) * ref;
  cx rel = prod * std::conj(base * base * base);
  return canonical_theta(std::arg(rel) / 3.0);
}

// Of the two candidate base points +-sqrt2 ref the one of smaller height
// marks theta = 0.
int base_sign(const Mobius& n, cx ref) {
  Mobius ninv = n.inverse();
  double s2 = std::sqrt(2.0);
  double hp = height(ninv.apply(ProjPoint::from_affine(s2 * ref)));
  double hm = height(ninv.apply(ProjPoint::from_affine(-s2 * ref)));
  return (hp <= hm) ? +1 : -1;
}

}  // namespace

UpDownClass updown_classify(const DecoratedTetra& T, const Tol& tol) {
  double s_c = eta(T.bary);
  double thr = s_c + eta_B_O();
  std::array<double, 4> h;
  for (int i = 0; i < 4; ++i) {
    h[i] = height(T.tetra.v[i]);
    if (std::isfinite(h[i]) && std::abs(h[i] - thr) < 1e-9)
      fail(Err::AmbiguousBoundary, "vertex sits on the splitting level");
  }
  std::vector<int> below;
  for (int i = 0; i < 4; ++i)
    if (h[i] < thr) below.push_back(i);

  if (below.empty()) return {UpDown::Up, std::nullopt, -1};
  if (below.size() > 1)
    fail(Err::NumericalDegeneracy, "several vertices below the splitting level");

  int b = below[0];
  ProjPoint v = T.tetra.v[b].normalized();
  std::array<ProjPoint, 3> high;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != b) high[k++] = T.tetra.v[i];

  Mobius n = norm_chart(v, T.dual[b], T.bary);
  cx ref = chart_reference(n);
  int sign = base_sign(n, ref);
  double theta = theta_in_chart(n, high, ref, sign);

  bool three = chordal(v, ProjPoint::from_affine(-I)) <= std::max(tol.tol, 1e-9);
  return {three ? UpDown::DownThree : UpDown::Down, DownCoord{v, theta}, b};
}

DecoratedTetra make_down_tetra(double c_eta, const DownCoord& dc, const Tol& tol) {
  H3Interior c = eta_inv(c_eta);
  double thr = c_eta + eta_B_O();
  double hv = height(dc.v);
  if (std::isfinite(hv)) {
    if (std::abs(hv - thr) < 1e-9)
      fail(Err::AmbiguousBoundary, "vertex sits on the splitting level");
    if (hv > thr)
      fail(Err::DomainError, "vertex is above the splitting level");
  } else if (hv > 0) {
    fail(Err::DomainError, "vertex is above the splitting level");
  }

  ProjPoint v = dc.v.normalized();
  ProjPoint vstar = antipode(c, v).normalized();
  Mobius n = norm_chart(v, vstar, c);
  cx ref = chart_reference(n);
  int sign = base_sign(n, ref);

  Mobius ninv = n.inverse();
  DecoratedTetra T;
  T.tetra.v[0] = v;
  double s2 = std::sqrt(2.0);
  for (int k = 0; k < 3; ++k) {
    cx w = cx(sign, 0) * s2 * ref *
           std::exp(I * (dc.theta + theta_period() * static_cast<double>(k)));
    T.tetra.v[k + 1] = ninv.apply(ProjPoint::from_affine(w)).normalized();
  }
  T.bary = c;
  for (int i = 0; i < 4; ++i) T.dual[i] = antipode(c, T.tetra.v[i]).normalized();
  (void)tol;
  return T;
}

DecoratedTetra M_shift(double lam, const DecoratedTetra& T, const Tol& tol) {
  UpDownClass ud = updown_classify(T, tol);
  if (ud.kind == UpDown::Up)
    fail(Err::DomainError, "shift with fixed low vertex needs a down tetra");
  if (ud.kind == UpDown::DownThree)
    return transport(axis_translate(lam), T);
  return make_down_tetra(eta(T.bary) + lam, *ud.coord, tol);
}

double f_shift(double v) {
  double B = eta_B_O();
  if (!(v < B)) fail(Err::DomainError, "height must lie below eta(B_O)");
  return v + 1.0 / (B - v);
}

double f_shift_inv(double h) {
  double B = eta_B_O();
  return 0.5 * ((B + h) - std::sqrt(sq(B - h) + 4.0));
}

double rho_s(double v, double s) { return std::min(v + s, f_shift(v)); }

FiberPoint reflect_iota(const FiberPoint& p) {
  switch (p.kind) {
    case FiberPoint::Kind::Tetra:
      return FiberPoint::from_tetra(reflect_iota(*p.tetra));
    case FiberPoint::Kind::DegenPlus:
      return FiberPoint::degen_minus(conj(*p.second));
    case FiberPoint::Kind::DegenMinus:
      return FiberPoint::degen_plus(conj(*p.second));
  }
  fail(Err::DomainError, "unreachable");
}

Lagrangian fiber_to_lagrangian(const FiberPoint& p, const Tol& tol) {
  switch (p.kind) {
    case FiberPoint::Kind::Tetra:
      return g_map(*p.tetra, tol);
    case FiberPoint::Kind::DegenPlus:
      return g_map(DegenTetra{ProjPoint::from_affine(I), *p.second}, tol);
    case FiberPoint::Kind::DegenMinus:
      return g_map(DegenTetra{ProjPoint::from_affine(-I), *p.second}, tol);
  }
  fail(Err::DomainError, "unreachable");
}

double fiber_distance(const FiberPoint& a, const FiberPoint& b, const Tol& tol) {
  return lagrangian_distance(fiber_to_lagrangian(a, tol), fiber_to_lagrangian(b, tol));
}

H2Point project_q(const Lagrangian& W, const Tol& tol) {
  if (in_KR(W, tol))
    fail(Err::NotInOmega, "plane lies over the real locus");
  return project_to_P(project_Q(W, tol), tol);
}

std::optional<FiberPoint> in_fiber_O(const Lagrangian& W, const Tol& tol) {
  OrbitClass cls = classify_orbit(W, tol);
  if (cls.tag == Orbit::Open) {
    DecoratedTetra T = std::get<DecoratedTetra>(g_inverse(W, tol));
    H2Point p = project_to_P(H3Point{T.bary}, tol);
    if (h2_distance(p, {0, 1}) <= 1e-7) return FiberPoint::from_tetra(T);
    return std::nullopt;
  }
  DegenTetra D = std::get<DegenTetra>(g_inverse(W, tol));
  if (chordal(D.first, ProjPoint::from_affine(I)) <= 1e-7)
    return FiberPoint::degen_plus(D.second);
  if (chordal(D.first, ProjPoint::from_affine(-I)) <= 1e-7)
    return FiberPoint::degen_minus(D.second);
  return std::nullopt;
}

FiberPoint phi(const DecoratedTetra& T, const ExtReal& s, const Tol& tol) {
  double at = eta(T.bary);
  if (std::abs(at) > 1e-7)
    fail(Err::DomainError, "tetra barycenter is not at the base point O");

  if (s.k == ExtReal::K::MinusInf)
    return reflect_iota(phi(reflect_iota(T), ExtReal::plus_inf(), tol));
  if (s.is_finite() && s.value < 0)
    return reflect_iota(phi(reflect_iota(T), ExtReal::finite(-s.value), tol));

  UpDownClass ud = updown_classify(T, tol);

  if (s.k == ExtReal::K::PlusInf) {
    if (ud.kind == UpDown::Up)
      return FiberPoint::degen_plus(ProjPoint::from_affine(I));
    if (ud.kind == UpDown::DownThree)
      return FiberPoint::degen_plus(ProjPoint::from_affine(-I));
    double h = height(ud.coord->v);
    double lam0 = f_shift(h) - h;
    ProjPoint vf = axis_translate(lam0).apply(ud.coord->v).normalized();
    return FiberPoint::degen_plus(vf);
  }

  double sv = s.value;
  if (ud.kind == UpDown::Up || ud.kind == UpDown::DownThree)
    return FiberPoint::from_tetra(transport(axis_translate(sv), T));

  double h = height(ud.coord->v);
  double lam0 = f_shift(h) - h;
  if (sv <= lam0)
    return FiberPoint::from_tetra(transport(axis_translate(sv), T));
  DecoratedTetra T1 = transport(axis_translate(lam0), T);
  return FiberPoint::from_tetra(M_shift(sv - lam0, T1, tol));
}

std::vector<DecoratedTetra> phi_fiber(const ProjPoint& z, int n, const Tol& tol) {
  if (n < 1) fail(Err::DomainError, "need at least one representative");
  ProjPoint pi_pt = ProjPoint::from_affine(I);
  if (chordal(z, pi_pt) <= std::max(tol.tol, 1e-9))
    fail(Err::DomainError, "the limit +i has no down representatives");

  std::vector<DecoratedTetra> out;
  out.reserve(n);

  if (chordal(z, ProjPoint::from_affine(-I)) <= std::max(tol.tol, 1e-9)) {
    // Rigid rotations of the symmetric model about the axis.
    Mobius minv = chart_m().inverse();
    H3Interior O{cx(0, 0), 1.0};
    double s2 = std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
      double alpha = theta_period() * static_cast<double>(j) / static_cast<double>(n);
      DecoratedTetra T;
      T.tetra.v[0] = ProjPoint::from_affine(-I);
      for (int k = 0; k < 3; ++k) {
        cx w = s2 * std::exp(I * (alpha + theta_period() * static_cast<double>(k)));
        T.tetra.v[k + 1] = minv.apply(ProjPoint::from_affine(w)).normalized();
      }
      T.bary = O;
      for (int i = 0; i < 4; ++i) T.dual[i] = antipode(O, T.tetra.v[i]).normalized();
      out.push_back(T);
    }
    return out;
  }

  double hz = height(z);
  double hv = f_shift_inv(hz);
  double lam = hz - hv;
  ProjPoint v = axis_translate(lam, -1).apply(z).normalized();
  for (int j = 0; j < n; ++j) {
    double theta = theta_period() * static_cast<double>(j) / static_cast<double>(n);
    out.push_back(make_down_tetra(0.0, DownCoord{v, theta}, tol));
  }
  return out;
}

}  // namespace lagtet
