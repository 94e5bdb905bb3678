#include "lagtetra/jsonio.hpp"

#include <cmath>
#include <sstream>

namespace lagtet {

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, e.what());
  }
}

cx parse_complex(const ordered_json& j) {
  if (j.is_number()) return cx(j.get<double>(), 0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cx(j[0].get<double>(), j[1].get<double>());
  fail(Err::ParseError, "complex number must be [re, im] or a number");
}

ProjPoint parse_proj_point(const ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ProjPoint::infinity();
    fail(Err::ParseError, "unknown point literal");
  }
  if (j.is_array() || j.is_number()) return ProjPoint::from_affine(parse_complex(j));
  if (j.is_object() && j.contains("a") && j.contains("b")) {
    ProjPoint p{parse_complex(j.at("a")), parse_complex(j.at("b"))};
    if (std::abs(p.a) == 0 && std::abs(p.b) == 0)
      fail(Err::ParseError, "zero homogeneous pair");
    return p;
  }
  fail(Err::ParseError, "point must be {\"a\":..,\"b\":..}, [re,im] or \"inf\"");
}

CubicForm parse_cubic(const ordered_json& j) {
  if (!j.is_array() || j.size() != 4)
    fail(Err::ParseError, "cubic form must be an array of four coefficients");
  CubicForm p;
  for (int i = 0; i < 4; ++i) p.c[i] = parse_complex(j[i]);
  return p;
}

Lagrangian parse_lagrangian(const ordered_json& j, const Tol& tol) {
  if (j.is_object() && j.contains("basis")) {
    const auto& b = j.at("basis");
    if (!b.is_array() || b.size() != 2)
      fail(Err::ParseError, "basis must hold two cubic forms");
    return Lagrangian(parse_cubic(b[0]), parse_cubic(b[1]), tol);
  }
  if (j.is_object() && j.contains("plucker")) {
    const auto& w = j.at("plucker");
    if (!w.is_array() || w.size() != 6)
      fail(Err::ParseError, "plucker must hold six coordinates");
    Plucker p;
    for (int i = 0; i < 6; ++i) p.w[i] = parse_complex(w[i]);
    return lagrangian_from_plucker(p, tol);
  }
  fail(Err::ParseError, "expected {\"basis\": [..]} or {\"plucker\": [..]}");
}

IdealTetra parse_ideal_tetra(const ordered_json& j) {
  const ordered_json* v = nullptr;
  if (j.is_array()) v = &j;
  else if (j.is_object() && j.contains("vertices")) v = &j.at("vertices");
  if (!v || !v->is_array() || v->size() != 4)
    fail(Err::ParseError, "tetra needs four vertices");
  IdealTetra T;
  for (int i = 0; i < 4; ++i) T.v[i] = parse_proj_point((*v)[i]);
  return T;
}

DecoratedTetra parse_tetra(const ordered_json& j, const Tol& tol) {
  return dual_tetra(parse_ideal_tetra(j), tol);
}

ExtReal parse_ext_real(const ordered_json& j) {
  if (j.is_number()) return ExtReal::finite(j.get<double>());
  if (j.is_object() && j.contains("inf")) {
    std::string s = j.at("inf").get<std::string>();
    if (s == "+") return ExtReal::plus_inf();
    if (s == "-" || s == "−") return ExtReal::minus_inf();
    fail(Err::ParseError, "inf sign must be \"+\" or \"-\"");
  }
  fail(Err::ParseError, "flow time must be a number or {\"inf\": sign}");
}

ordered_json json_of(cx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json json_of(const ProjPoint& p) {
  return {{"a", json_of(p.a)}, {"b", json_of(p.b)}};
}

ordered_json json_of(const CubicForm& p) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < 4; ++i) a.push_back(json_of(p.c[i]));
  return a;
}

ordered_json json_of(const Plucker& w) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < 6; ++i) a.push_back(json_of(w.w[i]));
  return a;
}

ordered_json json_of(const Lagrangian& W) {
  return {{"basis", ordered_json::array({json_of(W.basis1()), json_of(W.basis2())})},
          {"plucker", json_of(W.plucker())}};
}

ordered_json json_of(const H3Interior& p) {
  return {{"z", json_of(p.z)}, {"t", p.t}};
}

ordered_json json_of(const H3Point& p) {
  if (p.is_interior()) return json_of(p.as_interior());
  return {{"boundary", json_of(p.as_boundary())}};
}

ordered_json json_of(const H2Point& p) { return {{"x", p.x}, {"h", p.h}}; }

ordered_json json_of(const IdealTetra& T) {
  ordered_json v = ordered_json::array();
  for (int i = 0; i < 4; ++i) v.push_back(json_of(T.v[i]));
  return {{"vertices", v}};
}

ordered_json json_of(const DecoratedTetra& T) {
  ordered_json v = ordered_json::array(), d = ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    v.push_back(json_of(T.tetra.v[i]));
    d.push_back(json_of(T.dual[i]));
  }
  return {{"vertices", v}, {"dual", d}, {"barycenter", json_of(T.bary)}};
}

ordered_json json_of(const DegenTetra& D) {
  return {{"first", json_of(D.first)}, {"second", json_of(D.second)}};
}

ordered_json json_of(const FiberPoint& p) {
  switch (p.kind) {
    case FiberPoint::Kind::Tetra:
      return {{"kind", "tetra"}, {"tetra", json_of(*p.tetra)}};
    case FiberPoint::Kind::DegenPlus:
      return {{"kind", "degen_plus"}, {"second", json_of(*p.second)}};
    case FiberPoint::Kind::DegenMinus:
      return {{"kind", "degen_minus"}, {"second", json_of(*p.second)}};
  }
  fail(Err::DomainError, "unreachable");
}

ordered_json json_of(const ExtReal& s) {
  switch (s.k) {
    case ExtReal::K::Finite: return s.value;
    case ExtReal::K::PlusInf: return {{"inf", "+"}};
    case ExtReal::K::MinusInf: return {{"inf", "-"}};
  }
  fail(Err::DomainError, "unreachable");
}

namespace {

std::string brief(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

ordered_json classify_report(const Lagrangian& W, const Tol& tol) {
  ordered_json out;
  OrbitClass cls = classify_orbit(W, tol);
  out["orbit"] = orbit_name(cls.tag);
  if (cls.witness) {
    out["witness"] = json_of(*cls.witness);
    out["multiplicity"] = cls.multiplicity;
  }
  out["in_KR"] = in_KR(W, tol);
  out["in_Omega"] = in_Omega(W, tol);
  out["plucker"] = json_of(W.plucker());

  H3Point Q = project_Q(W, tol);
  out["projection"] = json_of(Q);

  std::string summary = orbit_name(cls.tag);
  if (cls.tag == Orbit::Open) {
    DecoratedTetra T = std::get<DecoratedTetra>(g_inverse(W, tol));
    out["tetra"] = json_of(T);
    summary += "; barycenter (" + brief(T.bary.z.real()) + (T.bary.z.imag() < 0 ? "" : "+") +
               brief(T.bary.z.imag()) + "i, " + brief(T.bary.t) + ")";
  } else {
    DegenTetra D = std::get<DegenTetra>(g_inverse(W, tol));
    out["degen"] = json_of(D);
    summary += std::string("; shared root of multiplicity ") +
               std::to_string(cls.multiplicity);
  }
  if (cls.tag != Orbit::Closed) {
    ordered_json pl = ordered_json::array();
    for (const auto& e : pencil_double_roots(W, tol))
      pl.push_back({{"pencil", json_of(e.pencil)},
                    {"double_root", json_of(e.double_root)},
                    {"single_root", json_of(e.single_root)}});
    out["pencil"] = pl;
  }
  out["summary"] = summary;
  return out;
}

ordered_json roundtrip_report(const Lagrangian& W, const Tol& tol) {
  ordered_json out;
  TetraOrDegen td = g_inverse(W, tol);
  Lagrangian back = std::holds_alternative<DecoratedTetra>(td)
                        ? g_map(std::get<DecoratedTetra>(td), tol)
                        : g_map(std::get<DegenTetra>(td), tol);
  double dist = lagrangian_distance(W, back);
  out["orbit"] = orbit_name(classify_orbit(W, tol).tag);
  if (std::holds_alternative<DecoratedTetra>(td))
    out["tetra"] = json_of(std::get<DecoratedTetra>(td));
  else
    out["degen"] = json_of(std::get<DegenTetra>(td));
  out["reconstructed"] = json_of(back);
  out["distance"] = dist;
  out["tolerance"] = 1e-8;
  out["pass"] = dist <= 1e-8;
  return out;
}

ordered_json project_report(const Lagrangian& W, const Tol& tol) {
  ordered_json out;
  out["Q"] = json_of(project_Q(W, tol));
  if (in_KR(W, tol)) {
    out["q"] = nullptr;
    out["note"] = "plane lies over the real locus, no half-plane projection";
  } else {
    out["q"] = json_of(project_q(W, tol));
  }
  return out;
}

ordered_json phi_report(const DecoratedTetra& T, const ExtReal& s, const Tol& tol) {
  FiberPoint r = phi(T, s, tol);
  return {{"s", json_of(s)}, {"result", json_of(r)}};
}

ordered_json fiber_sample_report(const ProjPoint& z, int n, const Tol& tol) {
  auto reps = phi_fiber(z, n, tol);
  ordered_json arr = ordered_json::array();
  double worst = 0;
  for (const auto& T : reps) {
    FiberPoint limit = phi(T, ExtReal::plus_inf(), tol);
    double d = chordal(*limit.second, z);
    worst = std::max(worst, d);
    arr.push_back(json_of(T));
  }
  return {{"z", json_of(z)},
          {"count", static_cast<int>(reps.size())},
          {"representatives", arr},
          {"max_limit_distance", worst}};
}

ordered_json scene_report(const DecoratedTetra& T, double s0, double s1, int steps,
                          const Tol& tol) {
  if (steps < 1) fail(Err::DomainError, "need at least one frame");
  ordered_json frames = ordered_json::array();
  for (int j = 0; j < steps; ++j) {
    double s = (steps == 1) ? s0 : s0 + (s1 - s0) * j / (steps - 1);
    FiberPoint p = phi(T, ExtReal::finite(s), tol);
    const DecoratedTetra& R = *p.tetra;
    ordered_json frame = {{"s", s}};
    ordered_json v = ordered_json::array(), d = ordered_json::array();
    for (int i = 0; i < 4; ++i) {
      v.push_back(json_of(R.tetra.v[i]));
      d.push_back(json_of(R.dual[i]));
    }
    frame["tetra"] = v;
    frame["dual"] = d;
    frame["barycenter"] = json_of(R.bary);
    frames.push_back(frame);
  }
  return {{"frames", frames}};
}

}  // namespace lagtet
