#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "hopflattice.h"

using nlohmann::json;

namespace {

struct Algebra {
  hl_algebra* p = nullptr;
  ~Algebra() { hl_algebra_free(p); }
};

struct Surface {
  hl_surface* p = nullptr;
  ~Surface() { hl_surface_free(p); }
};

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(std::string(s));
  hl_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("version string is present") {
  REQUIRE(hl_version() != nullptr);
  CHECK(std::string(hl_version()).find('.') != std::string::npos);
}

TEST_CASE("algebra lifecycle and info") {
  Algebra a;
  REQUIRE(hl_algebra_create("group:S3", &a.p) == HL_OK);
  char* out = nullptr;
  REQUIRE(hl_algebra_info(a.p, &out) == HL_OK);
  json j = take(out);
  CHECK(j["dim"] == 6);
  CHECK(j["spec"] == "group:S3");
}

TEST_CASE("bad specs report errors") {
  hl_algebra* a = nullptr;
  CHECK(hl_algebra_create("group:K4?", &a) != HL_OK);
  CHECK(a == nullptr);
  CHECK(std::string(hl_last_error()).size() > 0);
  hl_surface* s = nullptr;
  CHECK(hl_surface_create("moebius:strip", &s) == HL_UNKNOWN_SURFACE);
  CHECK(hl_algebra_create(nullptr, &a) == HL_INVALID_ARGUMENT);
}

TEST_CASE("wedderburn and double reports") {
  Algebra a;
  REQUIRE(hl_algebra_create("group:S3", &a.p) == HL_OK);
  char* out = nullptr;
  REQUIRE(hl_wedderburn(a.p, 7, &out) == HL_OK);
  json w = take(out);
  CHECK(w["blocks"].size() == 3);
  CHECK(w["sum_of_squares"] == 6);
  REQUIRE(hl_double_report(a.p, 7, &out) == HL_OK);
  json d = take(out);
  CHECK(d["dim"] == 36);
  CHECK(d["blocks"] == 8);
  CHECK(d["quasitriangularity_residual"].get<double>() < 1e-10);
}

TEST_CASE("ground dimension through the c api") {
  Algebra a;
  Surface s;
  REQUIRE(hl_algebra_create("group:Z2", &a.p) == HL_OK);
  REQUIRE(hl_surface_create("sphere:tetrahedron", &s.p) == HL_OK);
  char* out = nullptr;
  REQUIRE(hl_ground_dim(a.p, s.p, &out) == HL_OK);
  json j = take(out);
  CHECK(j["ground_dim"] == 1);
  CHECK(j["state_dim"] == 64);
}

TEST_CASE("verify suites") {
  Algebra a;
  Surface s;
  REQUIRE(hl_algebra_create("double:group:Z2", &a.p) == HL_OK);
  REQUIRE(hl_surface_create("sphere:bigon", &s.p) == HL_OK);
  char* out = nullptr;
  REQUIRE(hl_verify(a.p, nullptr, "axioms", 1, 1e-12, 1e-10, &out) == HL_OK);
  CHECK(take(out)["pass"] == true);
  for (const char* suite : {"commutation", "duality", "orientation"}) {
    CAPTURE(suite);
    REQUIRE(hl_verify(a.p, s.p, suite, 1, 1e-12, 1e-10, &out) == HL_OK);
    CHECK(take(out)["pass"] == true);
  }
  CHECK(hl_verify(a.p, s.p, "vibes", 1, 1e-12, 1e-10, &out) == HL_INVALID_ARGUMENT);
  CHECK(hl_verify(a.p, nullptr, "commutation", 1, 1e-12, 1e-10, &out) == HL_INVALID_ARGUMENT);
}

TEST_CASE("protected spaces through the c api") {
  Algebra a;
  Surface s;
  REQUIRE(hl_algebra_create("group:Z2", &a.p) == HL_OK);
  REQUIRE(hl_surface_create("torus:square-1v", &s.p) == HL_OK);
  char* out = nullptr;
  REQUIRE(hl_protected(a.p, s.p, "0", "all", 0xC0FFEE, &out) == HL_OK);
  json j = take(out);
  CHECK(j["consistency_ok"] == true);
  CHECK(j["tuples"].size() == 4);
  std::uint64_t top = 0;
  for (const auto& t : j["tuples"]) {
    CHECK(t["route_a"] == t["route_b"]);
    top = std::max(top, t["dim_M"].get<std::uint64_t>());
  }
  CHECK(top == 4);  // the invariant sector matches the torus ground space
  CHECK(hl_protected(a.p, s.p, "0,1", "all", 1, &out) == HL_SITES_NOT_DISJOINT);
}

TEST_CASE("oracles through the c api") {
  Algebra a;
  REQUIRE(hl_algebra_create("group:S3", &a.p) == HL_OK);
  char* out = nullptr;
  REQUIRE(hl_oracle("commuting-pairs", a.p, nullptr, &out) == HL_OK);
  json j = take(out);
  CHECK(j["match"] == true);
  CHECK(j["computed"] == 8);

  Surface s;
  REQUIRE(hl_surface_create("torus:square-1v", &s.p) == HL_OK);
  Algebra z3;
  REQUIRE(hl_algebra_create("group:Z3", &z3.p) == HL_OK);
  REQUIRE(hl_oracle("brute-ground-dim", z3.p, s.p, &out) == HL_OK);
  CHECK(take(out)["match"] == true);

  REQUIRE(hl_oracle("haar-formula", a.p, nullptr, &out) == HL_OK);
  CHECK(take(out)["match"] == true);

  Algebra dbl;
  REQUIRE(hl_algebra_create("double:group:Z2", &dbl.p) == HL_OK);
  CHECK(hl_oracle("haar-formula", dbl.p, nullptr, &out) == HL_UNSUPPORTED_FLAVOR);
  CHECK(hl_oracle("palmistry", a.p, nullptr, &out) == HL_INVALID_ARGUMENT);
}
