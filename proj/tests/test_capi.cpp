#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "lagtetra/lagtetra.h"

using json = nlohmann::json;

namespace {

constexpr const char* kOpenBasis = "{\"basis\": [[0,1,0,0],[1,0,0,1]]}";
constexpr const char* kStandardTetra =
    "{\"vertices\": [\"inf\", -1, [0.5, 0.8660254037844386],"
    " [0.5, -0.8660254037844386]]}";

// Owns a string returned through a char** output.
struct CStr {
  char* p = nullptr;
  ~CStr() { lagtetra_string_free(p); }
};

// Owns a context for the duration of a test case.
struct Ctx {
  lagtetra_ctx* p = lagtetra_ctx_new();
  ~Ctx() { lagtetra_ctx_free(p); }
};

}  // namespace

TEST_CASE("version string is a dotted release number") {
  const char* v = lagtetra_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v) == "1.0.0");
}

TEST_CASE("context lifecycle and configuration") {
  Ctx ctx;
  REQUIRE(ctx.p != nullptr);
  CHECK(std::string(lagtetra_last_error(ctx.p)) == "");
  CHECK(std::string(lagtetra_last_error(nullptr)) == "null context");

  CHECK(lagtetra_ctx_set_tolerance(ctx.p, 1e-10, 1e-7) == LAGTETRA_OK);
  CHECK(lagtetra_ctx_set_tolerance(ctx.p, 0.5, 1e-6) == LAGTETRA_EINVAL);
  CHECK(std::string(lagtetra_last_error(ctx.p)) != "");
  CHECK(lagtetra_ctx_set_tolerance(nullptr, 1e-10, 1e-7) == LAGTETRA_EINVAL);

  CHECK(lagtetra_ctx_set_seed(ctx.p, 99) == LAGTETRA_OK);
  CHECK(lagtetra_ctx_set_samples(ctx.p, 25) == LAGTETRA_OK);
  CHECK(lagtetra_ctx_set_samples(ctx.p, 0) == LAGTETRA_EINVAL);
  CHECK(lagtetra_ctx_set_samples(nullptr, 10) == LAGTETRA_EINVAL);

  lagtetra_ctx_free(nullptr);
}

TEST_CASE("plane handles parse, serialize and report") {
  Ctx ctx;
  lagtetra_lagrangian* w = nullptr;
  REQUIRE(lagtetra_lagrangian_parse(ctx.p, kOpenBasis, &w) == LAGTETRA_OK);
  REQUIRE(w != nullptr);

  {
    CStr s;
    REQUIRE(lagtetra_lagrangian_to_json(ctx.p, w, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc.contains("basis"));
    CHECK(doc["plucker"].size() == 6);
  }
  {
    CStr s;
    REQUIRE(lagtetra_lagrangian_classify(ctx.p, w, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["orbit"] == "Open");
    CHECK(doc["in_Omega"] == true);
    CHECK(doc["pencil"].size() == 4);
  }
  {
    CStr s;
    REQUIRE(lagtetra_lagrangian_roundtrip(ctx.p, w, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["pass"] == true);
    CHECK(doc["distance"].get<double>() <= 1e-8);
  }
  {
    CStr s;
    REQUIRE(lagtetra_lagrangian_project(ctx.p, w, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(!doc["q"].is_null());
    CHECK(doc["q"]["h"].get<double>() > 0);
  }

  char* out = nullptr;
  CHECK(lagtetra_lagrangian_classify(ctx.p, nullptr, &out) == LAGTETRA_EINVAL);
  CHECK(lagtetra_lagrangian_classify(ctx.p, w, nullptr) == LAGTETRA_EINVAL);
  CHECK(lagtetra_lagrangian_parse(ctx.p, nullptr, &w) == LAGTETRA_EINVAL);

  lagtetra_lagrangian_free(w);
  lagtetra_lagrangian_free(nullptr);
}

TEST_CASE("parse failures map to the parse code, geometry to the geometry code") {
  Ctx ctx;
  lagtetra_lagrangian* w = nullptr;
  CHECK(lagtetra_lagrangian_parse(ctx.p, "{nope", &w) == LAGTETRA_EPARSE);
  CHECK(std::string(lagtetra_last_error(ctx.p)) != "");
  CHECK(lagtetra_lagrangian_parse(ctx.p, "{}", &w) == LAGTETRA_EPARSE);
  CHECK(lagtetra_lagrangian_parse(ctx.p, "{\"basis\": [[1,0,0,0],[0,0,0,1]]}", &w) ==
        LAGTETRA_EGEOM);
  CHECK(lagtetra_lagrangian_parse(ctx.p, "{\"plucker\": [1,0,0,0,0,1]}", &w) ==
        LAGTETRA_EGEOM);

  lagtetra_tetra* t = nullptr;
  CHECK(lagtetra_tetra_parse(ctx.p, "[1, 2, 3]", &t) == LAGTETRA_EPARSE);
  CHECK(lagtetra_tetra_parse(ctx.p, "[0, 1, 2, \"inf\"]", &t) == LAGTETRA_EGEOM);
}

TEST_CASE("tetra handles flow along the fiber") {
  Ctx ctx;

  // A tetra over the base point comes out of the fiber sampler.
  std::string rep_text;
  {
    CStr s;
    REQUIRE(lagtetra_fiber_sample(ctx.p, "[0.2, -0.3]", 2, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["count"] == 2);
    CHECK(doc["max_limit_distance"].get<double>() < 1e-7);
    REQUIRE(doc["representatives"].size() == 2);
    rep_text = doc["representatives"][0].dump();
  }

  lagtetra_tetra* t = nullptr;
  REQUIRE(lagtetra_tetra_parse(ctx.p, rep_text.c_str(), &t) == LAGTETRA_OK);

  {
    CStr s;
    REQUIRE(lagtetra_tetra_to_json(ctx.p, t, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["vertices"].size() == 4);
    CHECK(doc["dual"].size() == 4);
  }
  {
    CStr s;
    REQUIRE(lagtetra_tetra_phi(ctx.p, t, "0.5", &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["s"] == 0.5);
    CHECK(doc["result"]["kind"] == "tetra");
  }
  {
    CStr s;
    REQUIRE(lagtetra_tetra_phi(ctx.p, t, "{\"inf\": \"+\"}", &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["result"]["kind"] == "degen_plus");
    // The limit endpoint is the sampled boundary point.
    json second = doc["result"]["second"];
    std::complex<double> a(second["a"][0].get<double>(), second["a"][1].get<double>());
    std::complex<double> b(second["b"][0].get<double>(), second["b"][1].get<double>());
    CHECK(std::abs(a / b - std::complex<double>(0.2, -0.3)) < 1e-7);
  }
  {
    CStr s;
    REQUIRE(lagtetra_tetra_scene(ctx.p, t, -0.3, 0.3, 4, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["frames"].size() == 4);
  }
  {
    CStr s;
    CHECK(lagtetra_tetra_scene(ctx.p, t, 0, 1, 0, &s.p) == LAGTETRA_EGEOM);
    CHECK(lagtetra_tetra_phi(ctx.p, t, "\"later\"", &s.p) == LAGTETRA_EPARSE);
    CHECK(lagtetra_tetra_phi(ctx.p, t, nullptr, &s.p) == LAGTETRA_EINVAL);
    CHECK(lagtetra_tetra_phi(ctx.p, nullptr, "1", &s.p) == LAGTETRA_EINVAL);
  }
  lagtetra_tetra_free(t);

  // A tetra away from the base point cannot flow.
  lagtetra_tetra* far = nullptr;
  REQUIRE(lagtetra_tetra_parse(ctx.p, kStandardTetra, &far) == LAGTETRA_OK);
  CStr s;
  CHECK(lagtetra_tetra_phi(ctx.p, far, "1", &s.p) == LAGTETRA_EGEOM);
  lagtetra_tetra_free(far);
}

TEST_CASE("fiber sampling accepts both point spellings and rejects the apex") {
  Ctx ctx;
  {
    CStr s;
    REQUIRE(lagtetra_fiber_sample(ctx.p, "{\"z\": [0, -1]}", 3, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["count"] == 3);
  }
  {
    CStr s;
    CHECK(lagtetra_fiber_sample(ctx.p, "[0, 1]", 2, &s.p) == LAGTETRA_EGEOM);
    CHECK(lagtetra_fiber_sample(ctx.p, "[0.2, -0.3]", 0, &s.p) == LAGTETRA_EGEOM);
    CHECK(lagtetra_fiber_sample(ctx.p, "what", 2, &s.p) == LAGTETRA_EPARSE);
    CHECK(lagtetra_fiber_sample(ctx.p, nullptr, 2, &s.p) == LAGTETRA_EINVAL);
  }
}

TEST_CASE("verification runs suites and reports") {
  Ctx ctx;
  REQUIRE(lagtetra_ctx_set_samples(ctx.p, 10) == LAGTETRA_OK);

  {
    CStr s;
    REQUIRE(lagtetra_verify(ctx.p, "topology", &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["pass"] == true);
    REQUIRE(doc["suites"].size() == 1);
    CHECK(doc["suites"][0]["suite"] == "topology");
    CHECK(doc["suites"][0]["checks"].size() == 5);
  }
  {
    CStr s;
    REQUIRE(lagtetra_verify(ctx.p, nullptr, &s.p) == LAGTETRA_OK);
    json doc = json::parse(s.p);
    CHECK(doc["pass"] == true);
    CHECK(doc["suites"].size() == 6);
  }
  {
    CStr s;
    CHECK(lagtetra_verify(ctx.p, "algebraic", &s.p) == LAGTETRA_EGEOM);
    CHECK(lagtetra_verify(ctx.p, "topology", nullptr) == LAGTETRA_EINVAL);
  }
}

TEST_CASE("topology certificate is deterministic") {
  Ctx ctx;
  CStr a, b;
  REQUIRE(lagtetra_topology_certificate(ctx.p, &a.p) == LAGTETRA_OK);
  REQUIRE(lagtetra_topology_certificate(ctx.p, &b.p) == LAGTETRA_OK);
  CHECK(std::string(a.p) == std::string(b.p));
  json doc = json::parse(a.p);
  CHECK(doc["conclusion"] == "CP^2 # conj CP^2");
  CHECK(doc["kernel"]["index"] == 3);
  CHECK(doc["system"]["determinant"] == 27);
}

TEST_CASE("mutated inputs never crash and map to the documented codes") {
  Ctx ctx;
  const std::vector<std::string> seeds = {
      kOpenBasis,
      kStandardTetra,
      "{\"plucker\": [[0,1],0,0,0,0,[2,0]]}",
      "[0.25, -1.5]",
      "{\"z\": [0, -1]}",
      "{\"basis\": [[1,0,0,0],[0,1,0,0]]}",
  };
  std::mt19937 rng(20260817u);
  const char alphabet[] = "0123456789.,:[]{}\"eE+-infbasulckrtz \\";

  for (int iter = 0; iter < 1000; ++iter) {
    std::string text = seeds[rng() % seeds.size()];
    int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      if (text.empty()) break;
      size_t pos = rng() % text.size();
      switch (rng() % 3) {
        case 0: text[pos] = alphabet[rng() % (sizeof(alphabet) - 1)]; break;
        case 1: text.erase(pos, 1); break;
        default:
          text.insert(pos, 1, alphabet[rng() % (sizeof(alphabet) - 1)]);
          break;
      }
    }

    int rc;
    switch (iter % 3) {
      case 0: {
        lagtetra_lagrangian* w = nullptr;
        rc = lagtetra_lagrangian_parse(ctx.p, text.c_str(), &w);
        if (rc == LAGTETRA_OK) lagtetra_lagrangian_free(w);
        break;
      }
      case 1: {
        lagtetra_tetra* t = nullptr;
        rc = lagtetra_tetra_parse(ctx.p, text.c_str(), &t);
        if (rc == LAGTETRA_OK) lagtetra_tetra_free(t);
        break;
      }
      default: {
        CStr s;
        rc = lagtetra_fiber_sample(ctx.p, text.c_str(), 1, &s.p);
        break;
      }
    }
    bool documented = rc == LAGTETRA_OK || rc == LAGTETRA_EPARSE ||
                      rc == LAGTETRA_EGEOM || rc == LAGTETRA_EINVAL;
    if (!documented) {
      CAPTURE(iter);
      CAPTURE(text);
      REQUIRE(documented);
    }
  }
}
