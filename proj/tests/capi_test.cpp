#include <gtest/gtest.h>

#include <cstring>
#include <memory>
#include <string>

#include "nassoc/nassoc.h"
#include "nlohmann/json.hpp"

using Json = nlohmann::json;

namespace {

struct Handle {
  nassoc_algebra* a = nullptr;
  ~Handle() { nassoc_algebra_free(a); }
};

std::string take(char* s) {
  std::string out(s);
  nassoc_string_free(s);
  return out;
}

const char* kAex =
    R"({"field":{"prime":2},"dim":2,"products":[{"i":0,"j":0,"terms":[{"k":0,"c":"1"}]},{"i":0,"j":1,"terms":[{"k":0,"c":"1"}]}]})";

}  // namespace

TEST(CApi, ParseQueryAndSerialize) {
  Handle h;
  ASSERT_EQ(nassoc_algebra_parse(kAex, &h.a), NASSOC_OK);
  EXPECT_EQ(nassoc_algebra_dim(h.a), 2u);
  int holds = -1;
  ASSERT_EQ(nassoc_check_identity(h.a, "bicommutative", &holds), NASSOC_OK);
  EXPECT_EQ(holds, 1);
  ASSERT_EQ(nassoc_check_identity(h.a, "associative", &holds), NASSOC_OK);
  EXPECT_EQ(holds, 0);
  char* text = nullptr;
  ASSERT_EQ(nassoc_algebra_serialize(h.a, &text), NASSOC_OK);
  Handle back;
  ASSERT_EQ(nassoc_algebra_parse(text, &back.a), NASSOC_OK);
  nassoc_string_free(text);
  EXPECT_EQ(nassoc_algebra_dim(back.a), 2u);
}

TEST(CApi, ReportsAreJson) {
  Handle h;
  ASSERT_EQ(nassoc_fixture("A_ex_F2", &h.a), NASSOC_OK);
  char* out = nullptr;
  ASSERT_EQ(nassoc_info(h.a, NASSOC_FORMAT_JSON, &out), NASSOC_OK);
  auto j = Json::parse(take(out));
  EXPECT_EQ(j["command"], "info");
  ASSERT_EQ(nassoc_decompose(h.a, nassoc_default_budget(), NASSOC_FORMAT_JSON, &out), NASSOC_OK);
  auto d = Json::parse(take(out));
  EXPECT_TRUE(d.contains("bicommutative_semisimple"));
  size_t failed = 99;
  ASSERT_EQ(nassoc_verify(h.a, nullptr, nassoc_default_budget(), NASSOC_FORMAT_JSON, &failed, &out), NASSOC_OK);
  auto v = Json::parse(take(out));
  EXPECT_EQ(failed, 0u);
  EXPECT_EQ(v["summary"]["checks"], 41);
}

TEST(CApi, StatusCodes) {
  Handle h;
  EXPECT_EQ(nassoc_algebra_parse("{", &h.a), NASSOC_ERR_PARSE);
  EXPECT_NE(std::strlen(nassoc_last_error()), 0u);
  EXPECT_EQ(nassoc_algebra_parse(nullptr, &h.a), NASSOC_ERR_USAGE);
  EXPECT_EQ(nassoc_fixture("nope", &h.a), NASSOC_ERR_USAGE);
  EXPECT_EQ(nassoc_algebra_load("/nonexistent/file.json", &h.a), NASSOC_ERR_PARSE);
  char* out = nullptr;
  Handle q;
  ASSERT_EQ(nassoc_fixture("A_ex_Q", &q.a), NASSOC_OK);
  EXPECT_EQ(nassoc_minimal_ideals(q.a, nassoc_default_budget(), NASSOC_FORMAT_JSON, &out), NASSOC_ERR_UNSUPPORTED);
  EXPECT_NE(std::string(nassoc_last_error()).find("finite field"), std::string::npos);
  Handle t;
  ASSERT_EQ(nassoc_fixture("T3", &t.a), NASSOC_OK);
  EXPECT_EQ(nassoc_split(t.a, nassoc_default_budget(), NASSOC_FORMAT_JSON, &out), NASSOC_ERR_REFUSED);
  EXPECT_EQ(nassoc_series(t.a, "sideways", NASSOC_FORMAT_JSON, &out), NASSOC_ERR_USAGE);
  EXPECT_EQ(nassoc_verify(t.a, "no_such_check", nassoc_default_budget(), NASSOC_FORMAT_JSON, nullptr, &out),
            NASSOC_ERR_USAGE);
  EXPECT_EQ(nassoc_info(nullptr, NASSOC_FORMAT_JSON, &out), NASSOC_ERR_USAGE);
  nassoc_budget tiny{4, 4};
  EXPECT_EQ(nassoc_frattini(t.a, tiny, NASSOC_FORMAT_JSON, &out), NASSOC_ERR_UNSUPPORTED);
  EXPECT_STREQ(nassoc_status_name(NASSOC_ERR_REFUSED), "refused");
}

TEST(CApi, VerifyAssumingReportsViolation) {
  Handle h;
  // A_ex with yx = y, claimed bicommutative.
  ASSERT_EQ(nassoc_algebra_parse(
                R"({"field":{"prime":2},"dim":2,"products":[{"i":0,"j":0,"terms":[{"k":0,"c":"1"}]},)"
                R"({"i":0,"j":1,"terms":[{"k":0,"c":"1"}]},{"i":1,"j":0,"terms":[{"k":1,"c":"1"}]}]})",
                &h.a),
            NASSOC_OK);
  char* out = nullptr;
  size_t failed = 0;
  ASSERT_EQ(nassoc_verify_assuming(h.a, nullptr, R"({"identities":["bicommutative"]})", nassoc_default_budget(),
                                   NASSOC_FORMAT_JSON, &failed, &out),
            NASSOC_OK);
  auto j = Json::parse(take(out));
  EXPECT_GT(failed, 0u);
  EXPECT_EQ(nassoc_verify_assuming(h.a, nullptr, R"({"identities":["nope"]})", nassoc_default_budget(),
                                   NASSOC_FORMAT_JSON, &failed, &out),
            NASSOC_ERR_PARSE);
}

TEST(CApi, SearchAndListings) {
  char* out = nullptr;
  nassoc_search_options o = nassoc_default_search_options();
  ASSERT_EQ(nassoc_search("F_2", 1, "any", &o, NASSOC_FORMAT_JSON, &out), NASSOC_OK);
  auto j = Json::parse(take(out));
  EXPECT_EQ(j["algebras"].size(), 2u);
  EXPECT_EQ(nassoc_search("4", 1, "any", &o, NASSOC_FORMAT_JSON, &out), NASSOC_ERR_USAGE);
  ASSERT_EQ(nassoc_check_names(&out), NASSOC_OK);
  EXPECT_NE(take(out).find("biss_decomposition\n"), std::string::npos);
  ASSERT_EQ(nassoc_fixture_names(&out), NASSOC_OK);
  EXPECT_NE(take(out).find("A_ex_F2\n"), std::string::npos);
}
