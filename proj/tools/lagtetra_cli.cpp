// Command line front end; talks to the library exclusively through the
// C interface.
#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lagtetra/lagtetra.h"

namespace {

struct Options {
  double tol = 1e-9;
  double cluster = 1e-6;
  std::uint64_t seed = 1729;
  int samples = 100;
  std::string in = "-";
  std::string out;
};

// Shell exit codes: 0 ok, 1 verify failure, 2 bad input or usage, 3 geometry
// or internal failure.
int exit_code_of(int rc) {
  switch (rc) {
    case LAGTETRA_OK: return 0;
    case LAGTETRA_EVERIFY: return 1;
    case LAGTETRA_EPARSE:
    case LAGTETRA_EINVAL: return 2;
    default: return 3;
  }
}

int fail_with(lagtetra_ctx* ctx, int rc) {
  const char* msg = lagtetra_last_error(ctx);
  std::cerr << "error: " << (msg && *msg ? msg : "unknown failure") << "\n";
  return exit_code_of(rc);
}

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    return true;
  }
  std::ifstream f(path);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  text = ss.str();
  return true;
}

int emit(const Options& opt, const char* text) {
  std::cout << text << "\n";
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 2;
    }
    f << text << "\n";
  }
  return 0;
}

int with_lagrangian(lagtetra_ctx* ctx, const Options& opt,
                    int (*op)(lagtetra_ctx*, const lagtetra_lagrangian*, char**)) {
  std::string text;
  if (!read_input(opt.in, text)) {
    std::cerr << "error: cannot read " << opt.in << "\n";
    return 2;
  }
  lagtetra_lagrangian* w = nullptr;
  int rc = lagtetra_lagrangian_parse(ctx, text.c_str(), &w);
  if (rc != LAGTETRA_OK) return fail_with(ctx, rc);
  char* rep = nullptr;
  rc = op(ctx, w, &rep);
  lagtetra_lagrangian_free(w);
  if (rc != LAGTETRA_OK) return fail_with(ctx, rc);
  int erc = emit(opt, rep);
  lagtetra_string_free(rep);
  return erc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian planes, regular ideal tetrahedra and the flow between them"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol, "working tolerance");
  app.add_option("--cluster-tol", opt.cluster, "root clustering tolerance");
  app.add_option("--seed", opt.seed, "random stream seed");
  app.add_option("--samples", opt.samples, "sample count for verify and fiber-sample");
  app.add_option("--out", opt.out, "also write the JSON document to this file");

  auto* classify = app.add_subcommand("classify", "orbit type of a plane");
  classify->add_option("--in", opt.in, "input JSON file, - for stdin");
  auto* roundtrip = app.add_subcommand("roundtrip", "plane -> tetra -> plane distance");
  roundtrip->add_option("--in", opt.in, "input JSON file, - for stdin");
  auto* project = app.add_subcommand("project", "projections to the half space and half plane");
  project->add_option("--in", opt.in, "input JSON file, - for stdin");

  auto* phi = app.add_subcommand("phi", "flow a tetra with barycenter at O");
  std::string s_text = "0";
  phi->add_option("--in", opt.in, "tetra JSON file, - for stdin");
  phi->add_option("--s", s_text, "flow time: number, +inf or -inf");

  auto* scene = app.add_subcommand("scene", "sampled flow trajectory");
  double s0 = 0, s1 = 1;
  int steps = 16;
  scene->add_option("--in", opt.in, "tetra JSON file, - for stdin");
  scene->add_option("--s0", s0, "first flow time");
  scene->add_option("--s1", s1, "last flow time");
  scene->add_option("--steps", steps, "number of frames");

  auto* fiber = app.add_subcommand("fiber-sample", "tetra flowing to a boundary point");
  fiber->add_option("--in", opt.in, "boundary point JSON file, - for stdin");

  auto* verify = app.add_subcommand("verify", "run self check suites");
  std::vector<std::string> suites;
  bool topology_cert = false;
  verify->add_option("--suite", suites, "suite name (repeatable); default all");
  verify->add_flag("--topology", topology_cert, "emit the topology certificate JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  lagtetra_ctx* ctx = lagtetra_ctx_new();
  int crc = lagtetra_ctx_set_tolerance(ctx, opt.tol, opt.cluster);
  if (crc == LAGTETRA_OK) {
    lagtetra_ctx_set_seed(ctx, opt.seed);
    crc = lagtetra_ctx_set_samples(ctx, opt.samples);
  }
  if (crc != LAGTETRA_OK) {
    int rc = fail_with(ctx, crc);
    lagtetra_ctx_free(ctx);
    return rc;
  }

  int rc = 0;
  if (*classify) {
    rc = with_lagrangian(ctx, opt, lagtetra_lagrangian_classify);
  } else if (*roundtrip) {
    rc = with_lagrangian(ctx, opt, lagtetra_lagrangian_roundtrip);
  } else if (*project) {
    rc = with_lagrangian(ctx, opt, lagtetra_lagrangian_project);
  } else if (*phi) {
    std::string text;
    if (!read_input(opt.in, text)) {
      std::cerr << "error: cannot read " << opt.in << "\n";
      rc = 2;
    } else {
      lagtetra_tetra* t = nullptr;
      rc = lagtetra_tetra_parse(ctx, text.c_str(), &t);
      if (rc != LAGTETRA_OK) {
        rc = fail_with(ctx, rc);
      } else {
        std::string s_json = s_text;
        if (s_text == "+inf" || s_text == "inf") s_json = "{\"inf\":\"+\"}";
        if (s_text == "-inf") s_json = "{\"inf\":\"-\"}";
        char* rep = nullptr;
        rc = lagtetra_tetra_phi(ctx, t, s_json.c_str(), &rep);
        lagtetra_tetra_free(t);
        if (rc != LAGTETRA_OK) rc = fail_with(ctx, rc);
        else {
          rc = emit(opt, rep);
          lagtetra_string_free(rep);
        }
      }
    }
  } else if (*scene) {
    std::string text;
    if (!read_input(opt.in, text)) {
      std::cerr << "error: cannot read " << opt.in << "\n";
      rc = 2;
    } else {
      lagtetra_tetra* t = nullptr;
      rc = lagtetra_tetra_parse(ctx, text.c_str(), &t);
      if (rc != LAGTETRA_OK) {
        rc = fail_with(ctx, rc);
      } else {
        char* rep = nullptr;
        rc = lagtetra_tetra_scene(ctx, t, s0, s1, steps, &rep);
        lagtetra_tetra_free(t);
        if (rc != LAGTETRA_OK) rc = fail_with(ctx, rc);
        else {
          rc = emit(opt, rep);
          lagtetra_string_free(rep);
        }
      }
    }
  } else if (*fiber) {
    std::string text;
    if (!read_input(opt.in, text)) {
      std::cerr << "error: cannot read " << opt.in << "\n";
      rc = 2;
    } else {
      char* rep = nullptr;
      rc = lagtetra_fiber_sample(ctx, text.c_str(), opt.samples, &rep);
      if (rc != LAGTETRA_OK) rc = fail_with(ctx, rc);
      else {
        rc = emit(opt, rep);
        lagtetra_string_free(rep);
      }
    }
  } else if (*verify) {
    if (topology_cert) {
      char* cert = nullptr;
      rc = lagtetra_topology_certificate(ctx, &cert);
      if (rc != LAGTETRA_OK) {
        rc = fail_with(ctx, rc);
      } else {
        rc = emit(opt, cert);
        lagtetra_string_free(cert);
      }
    } else {
      std::string csv;
      for (const auto& s : suites) {
        if (!csv.empty()) csv += ",";
        csv += s;
      }
      char* rep = nullptr;
      int vrc = lagtetra_verify(ctx, csv.empty() ? nullptr : csv.c_str(), &rep);
      if (vrc != LAGTETRA_OK && vrc != LAGTETRA_EVERIFY) {
        rc = fail_with(ctx, vrc);
      } else {
        if (rep) {
          rc = emit(opt, rep);
          lagtetra_string_free(rep);
        }
        if (rc == 0) rc = (vrc == LAGTETRA_EVERIFY) ? 1 : 0;
      }
    }
  }

  lagtetra_ctx_free(ctx);
  return rc;
}
