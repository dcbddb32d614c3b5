#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "shoda/shoda.h"

using nlohmann::json;

namespace {

struct Algebra {
  explicit Algebra(const char* text) {
    char* err = nullptr;
    status = shoda_algebra_from_json(text, &handle, &err);
    shoda_string_free(err);
  }
  ~Algebra() { shoda_algebra_free(handle); }
  shoda_algebra* handle = nullptr;
  shoda_status status = SHODA_OK;
};

struct ElementHandle {
  ElementHandle(const shoda_algebra* a, const std::string& text) {
    char* err = nullptr;
    status = shoda_element_from_json(a, text.c_str(), &handle, &err);
    shoda_string_free(err);
  }
  ~ElementHandle() { shoda_element_free(handle); }
  shoda_element* handle = nullptr;
  shoda_status status = SHODA_OK;
};

json take(char* s) {
  json j = json::parse(s);
  shoda_string_free(s);
  return j;
}

const char* kWitness = R"({"blocks":[[[3,0],[0,3]],[[-2,0,0],[0,-2,0],[0,0,-2]]]})";

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(shoda_status_name(SHODA_OK), "Ok");
  EXPECT_STREQ(shoda_status_name(SHODA_NOT_TRACELESS), "NotTraceless");
  EXPECT_STREQ(shoda_status_name(SHODA_INTERNAL_ERROR), "InternalError");
  EXPECT_STREQ(shoda_status_name(static_cast<shoda_status>(999)), "Unknown");
}

TEST(CApi, DefaultOptions) {
  const shoda_options o = shoda_default_options();
  EXPECT_EQ(o.tol, 1e-9);
  EXPECT_EQ(o.seed, 42u);
  EXPECT_EQ(o.samples, 1000);
}

TEST(CApi, ParseErrors) {
  shoda_algebra* a = nullptr;
  char* err = nullptr;
  EXPECT_EQ(shoda_algebra_from_json("{oops", &a, &err), SHODA_PARSE_ERROR);
  EXPECT_EQ(a, nullptr);
  EXPECT_EQ(take(err)["error"], "ParseError");
  EXPECT_EQ(Algebra(R"({"blocks":[]})").status, SHODA_INVALID_ARGUMENT);
  EXPECT_EQ(shoda_algebra_from_json(nullptr, &a, nullptr), SHODA_INVALID_ARGUMENT);
}

TEST(CApi, CompleteAndCheck) {
  Algebra a(R"({"blocks":[2,3]})");
  ASSERT_EQ(a.status, SHODA_OK);
  char* out = nullptr;
  ASSERT_EQ(shoda_complete(a.handle, nullptr, 0, &out), SHODA_OK);
  const json r = take(out);
  EXPECT_EQ(r["N"], 5);
  EXPECT_EQ(r["components"], json::array({25}));
  ASSERT_EQ(shoda_check(a.handle, nullptr, &out), SHODA_OK);
  const json c = take(out);
  EXPECT_EQ(c["verdict"], false);
  EXPECT_FALSE(c["witness"].is_null());
}

TEST(CApi, DecomposeRoutesThroughCompletion) {
  Algebra a(R"({"blocks":[2,3]})");
  ElementHandle t(a.handle, kWitness);
  ASSERT_EQ(t.status, SHODA_OK);
  char* out = nullptr;
  EXPECT_EQ(shoda_decompose(t.handle, nullptr, 0, &out), SHODA_NOT_SHODA_COMPLETE);
  EXPECT_EQ(take(out)["error"], "NotShodaComplete");
  ASSERT_EQ(shoda_decompose(t.handle, nullptr, 1, &out), SHODA_OK);
  const json w = take(out);
  EXPECT_LT(w["residual"].get<double>(), 1e-9);
  EXPECT_EQ(w["kind"], "completion");
}

TEST(CApi, ElementQueries) {
  Algebra a(R"({"blocks":[2]})");
  ElementHandle e(a.handle, R"({"blocks":[[[2,0],[0,0]]]})");
  char* out = nullptr;
  ASSERT_EQ(shoda_rank(e.handle, nullptr, &out), SHODA_OK);
  EXPECT_EQ(take(out)["rank"], 1);
  ASSERT_EQ(shoda_trace(e.handle, &out), SHODA_OK);
  EXPECT_EQ(take(out)["trace"], json::array({2.0, 0.0}));
  ASSERT_EQ(shoda_spectrum(e.handle, nullptr, &out), SHODA_OK);
  EXPECT_EQ(take(out)["nonzero_part"].size(), 1u);
  ASSERT_EQ(shoda_riesz(e.handle, 2.0, 0.0, nullptr, &out), SHODA_OK);
  EXPECT_EQ(take(out)["rank"], 1);
  EXPECT_EQ(shoda_riesz(e.handle, 5.0, 0.0, nullptr, &out), SHODA_NO_SUCH_SPECTRAL_VALUE);
  shoda_string_free(out);
  ASSERT_EQ(shoda_element_to_json(e.handle, &out), SHODA_OK);
  ElementHandle again(a.handle, take(out).dump());
  ASSERT_EQ(again.status, SHODA_OK);
}

TEST(CApi, ShapeMismatch) {
  Algebra a(R"({"blocks":[2]})");
  ElementHandle e(a.handle, R"({"blocks":[[[1]]]})");
  EXPECT_EQ(e.status, SHODA_SHAPE_MISMATCH);
}

TEST(CApi, Paths) {
  Algebra a(R"({"blocks":[2]})");
  ElementHandle p(a.handle, R"({"blocks":[[[1,0],[0,0]]]})");
  ElementHandle q(a.handle, R"({"blocks":[[[0,0],[0,1]]]})");
  shoda_options o = shoda_default_options();
  o.samples = 20;
  char* out = nullptr;
  ASSERT_EQ(shoda_projection_path(p.handle, q.handle, &o, &out), SHODA_OK);
  const json path = take(out);
  EXPECT_EQ(path["samples"], 20);
  EXPECT_LT(path["max_idempotency_defect"].get<double>(), 1e-9);
  ASSERT_EQ(shoda_rank_path(p.handle, q.handle, 1, &o, &out), SHODA_OK);
  for (const auto& r : take(out)["ranks"]) EXPECT_EQ(r, 1);
}

TEST(CApi, InvalidOptions) {
  Algebra a(R"({"blocks":[2]})");
  shoda_options o = shoda_default_options();
  o.tol = -1.0;
  char* out = nullptr;
  EXPECT_EQ(shoda_check(a.handle, &o, &out), SHODA_INVALID_ARGUMENT);
  shoda_string_free(out);
}

TEST(CApi, NormAudit) {
  Algebra a(R"({"blocks":[1,2]})");
  shoda_options o = shoda_default_options();
  o.samples = 100;
  char* out = nullptr;
  ASSERT_EQ(shoda_norm_audit(a.handle, &o, &out), SHODA_OK);
  const json r = take(out);
  EXPECT_LE(r["worst_ratio"].get<double>(), 1.0 + 1e-9);
  EXPECT_LT(r["isometry_dev"].get<double>(), 1e-12);
  EXPECT_EQ(r["norm_on_A"], "max-block-operator");
}

TEST(CApi, Info) {
  Algebra a(R"({"blocks":[2,3]})");
  char* out = nullptr;
  ASSERT_EQ(shoda_info(a.handle, &out), SHODA_OK);
  const json r = take(out);
  EXPECT_EQ(r["N"], 5);
  EXPECT_EQ(r["dimension"], 13);
}
