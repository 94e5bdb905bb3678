#pragma once

#include <json.hpp>

#include "lagtetra/fibration.hpp"

namespace lagtet {

using ordered_json = nlohmann::ordered_json;

// Parsing throws Error(ParseError) for malformed structure; geometric
// validation failures keep their own codes.
ordered_json parse_document(const std::string& text);

cx parse_complex(const ordered_json& j);
ProjPoint parse_proj_point(const ordered_json& j);
CubicForm parse_cubic(const ordered_json& j);
Lagrangian parse_lagrangian(const ordered_json& j, const Tol& tol = {});
IdealTetra parse_ideal_tetra(const ordered_json& j);
// Accepts {"vertices": [...]} and rebuilds the decoration.
DecoratedTetra parse_tetra(const ordered_json& j, const Tol& tol = {});
ExtReal parse_ext_real(const ordered_json& j);

ordered_json json_of(cx z);
ordered_json json_of(const ProjPoint& p);
ordered_json json_of(const CubicForm& p);
ordered_json json_of(const Plucker& w);
ordered_json json_of(const Lagrangian& W);
ordered_json json_of(const H3Interior& p);
ordered_json json_of(const H3Point& p);
ordered_json json_of(const H2Point& p);
ordered_json json_of(const IdealTetra& T);
ordered_json json_of(const DecoratedTetra& T);
ordered_json json_of(const DegenTetra& D);
ordered_json json_of(const FiberPoint& p);
ordered_json json_of(const ExtReal& s);

// Report documents backing the C API and the command line tool.
ordered_json classify_report(const Lagrangian& W, const Tol& tol = {});
ordered_json roundtrip_report(const Lagrangian& W, const Tol& tol = {});
ordered_json project_report(const Lagrangian& W, const Tol& tol = {});
ordered_json phi_report(const DecoratedTetra& T, const ExtReal& s, const Tol& tol = {});
ordered_json fiber_sample_report(const ProjPoint& z, int n, const Tol& tol = {});
ordered_json scene_report(const DecoratedTetra& T, double s0, double s1, int steps,
                          const Tol& tol = {});

}  // namespace lagtet
