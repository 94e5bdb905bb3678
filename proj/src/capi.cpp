#include "lagtetra/lagtetra.h"

#include <cstring>
#include <sstream>
#include <string>

#include "lagtetra/jsonio.hpp"
#include "lagtetra/topology.hpp"
#include "lagtetra/verify.hpp"

using namespace lagtet;

struct lagtetra_ctx {
  RunConfig cfg;
  std::string last_error;
};

struct lagtetra_lagrangian {
  Lagrangian w;
};

struct lagtetra_tetra {
  DecoratedTetra t;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int geom_code(Err e) {
  return e == Err::ParseError ? LAGTETRA_EPARSE : LAGTETRA_EGEOM;
}

template <typename F>
int guarded(lagtetra_ctx* ctx, F&& f) {
  if (!ctx) return LAGTETRA_EINVAL;
  ctx->last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return geom_code(e.code);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return LAGTETRA_EINTERNAL;
  }
}

}  // namespace

extern "C" {

const char* lagtetra_version(void) { return "1.0.0"; }

lagtetra_ctx* lagtetra_ctx_new(void) { return new lagtetra_ctx{}; }

void lagtetra_ctx_free(lagtetra_ctx* ctx) { delete ctx; }

int lagtetra_ctx_set_tolerance(lagtetra_ctx* ctx, double tol, double cluster) {
  if (!ctx) return LAGTETRA_EINVAL;
  RunConfig next = ctx->cfg;
  next.tol = tol;
  next.cluster = cluster;
  try {
    validate(next);
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return LAGTETRA_EINVAL;
  }
  ctx->cfg = next;
  return LAGTETRA_OK;
}

int lagtetra_ctx_set_seed(lagtetra_ctx* ctx, uint64_t seed) {
  if (!ctx) return LAGTETRA_EINVAL;
  ctx->cfg.seed = seed;
  return LAGTETRA_OK;
}

int lagtetra_ctx_set_samples(lagtetra_ctx* ctx, int samples) {
  if (!ctx) return LAGTETRA_EINVAL;
  if (samples <= 0) {
    ctx->last_error = "samples must be positive";
    return LAGTETRA_EINVAL;
  }
  ctx->cfg.samples = samples;
  return LAGTETRA_OK;
}

const char* lagtetra_last_error(const lagtetra_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void lagtetra_string_free(char* s) { delete[] s; }

int lagtetra_lagrangian_parse(lagtetra_ctx* ctx, const char* json,
                              lagtetra_lagrangian** out) {
  if (!json || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    Lagrangian w = parse_lagrangian(parse_document(json), ctx->cfg.tolerances());
    *out = new lagtetra_lagrangian{w};
    return LAGTETRA_OK;
  });
}

void lagtetra_lagrangian_free(lagtetra_lagrangian* w) { delete w; }

int lagtetra_lagrangian_to_json(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                char** out) {
  if (!w || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    *out = dup_string(json_of(w->w).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_lagrangian_classify(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                 char** out) {
  if (!w || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    *out = dup_string(classify_report(w->w, ctx->cfg.tolerances()).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_lagrangian_project(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                char** out) {
  if (!w || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    *out = dup_string(project_report(w->w, ctx->cfg.tolerances()).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_lagrangian_roundtrip(lagtetra_ctx* ctx, const lagtetra_lagrangian* w,
                                  char** out) {
  if (!w || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    *out = dup_string(roundtrip_report(w->w, ctx->cfg.tolerances()).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_tetra_parse(lagtetra_ctx* ctx, const char* json, lagtetra_tetra** out) {
  if (!json || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    DecoratedTetra t = parse_tetra(parse_document(json), ctx->cfg.tolerances());
    *out = new lagtetra_tetra{t};
    return LAGTETRA_OK;
  });
}

void lagtetra_tetra_free(lagtetra_tetra* t) { delete t; }

int lagtetra_tetra_to_json(lagtetra_ctx* ctx, const lagtetra_tetra* t, char** out) {
  if (!t || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    *out = dup_string(json_of(t->t).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_tetra_phi(lagtetra_ctx* ctx, const lagtetra_tetra* t, const char* s_json,
                       char** out) {
  if (!t || !s_json || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    ExtReal s = parse_ext_real(parse_document(s_json));
    *out = dup_string(phi_report(t->t, s, ctx->cfg.tolerances()).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_tetra_scene(lagtetra_ctx* ctx, const lagtetra_tetra* t, double s0,
                         double s1, int steps, char** out) {
  if (!t || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    *out = dup_string(scene_report(t->t, s0, s1, steps, ctx->cfg.tolerances()).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_fiber_sample(lagtetra_ctx* ctx, const char* z_json, int n, char** out) {
  if (!z_json || !out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    ordered_json doc = parse_document(z_json);
    ProjPoint z = doc.is_object() && doc.contains("z") ? parse_proj_point(doc.at("z"))
                                                       : parse_proj_point(doc);
    *out = dup_string(fiber_sample_report(z, n, ctx->cfg.tolerances()).dump(2));
    return LAGTETRA_OK;
  });
}

int lagtetra_verify(lagtetra_ctx* ctx, const char* suites_csv, char** out) {
  if (!out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    std::vector<std::string> names;
    if (!suites_csv || !*suites_csv) {
      names = suite_names();
    } else {
      std::stringstream ss(suites_csv);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) names.push_back(item);
      }
    }
    auto results = run_suites(names, ctx->cfg);
    ordered_json rep;
    bool all = true;
    ordered_json suites = ordered_json::array();
    for (const auto& s : results) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : s.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      suites.push_back({{"suite", s.name}, {"pass", s.passed()}, {"checks", checks}});
      all = all && s.passed();
    }
    rep["suites"] = suites;
    rep["pass"] = all;
    *out = dup_string(rep.dump(2));
    return all ? LAGTETRA_OK : LAGTETRA_EVERIFY;
  });
}

int lagtetra_topology_certificate(lagtetra_ctx* ctx, char** out) {
  if (!out) return LAGTETRA_EINVAL;
  return guarded(ctx, [&] {
    *out = dup_string(topo::certificate_json());
    return LAGTETRA_OK;
  });
}

}  // extern "C"
