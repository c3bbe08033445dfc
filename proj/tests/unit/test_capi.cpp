#include <gtest/gtest.h>

#include <string>

#include "dsseq/dsseq.h"
#include "json.hpp"

namespace {

struct Out {
  char* s = nullptr;
  ~Out() { dsseq_string_free(s); }
  nlohmann::json json() const { return nlohmann::json::parse(s); }
};

struct Mod {
  dsseq_module* m = nullptr;
  explicit Mod(const char* e) { EXPECT_EQ(dsseq_module_parse(e, &m), DSSEQ_OK) << dsseq_last_error(); }
  ~Mod() { dsseq_module_free(m); }
};

}  // namespace

TEST(CApi, ParseErrorReportsOffset) {
  dsseq_module* m = reinterpret_cast<dsseq_module*>(1);
  EXPECT_EQ(dsseq_module_parse("W(2 (+)", &m), DSSEQ_PARSE_ERROR);
  EXPECT_EQ(m, nullptr);
  EXPECT_EQ(dsseq_last_error_offset(), 4);
  EXPECT_NE(std::string(dsseq_last_error()).find("expected"), std::string::npos);

  Mod ok("P");
  EXPECT_EQ(dsseq_last_error_offset(), -1);
  EXPECT_STREQ(dsseq_last_error(), "");
}

TEST(CApi, DimsAndPrintedForm) {
  Mod m("W(1) (x) W(1)");
  size_t even = 0, odd = 0;
  ASSERT_EQ(dsseq_module_dims(m.m, &even, &odd), DSSEQ_OK);
  EXPECT_EQ(even, 5u);
  EXPECT_EQ(odd, 4u);
  Out s;
  ASSERT_EQ(dsseq_module_expr(m.m, &s.s), DSSEQ_OK);
  EXPECT_STREQ(s.s, "W(1) (x) W(1)");
}

TEST(CApi, PagesJson) {
  Mod m("X(2)");
  Out s;
  ASSERT_EQ(dsseq_pages(m.m, DSSEQ_ORDER_YX, -1, DSSEQ_JSON, &s.s), DSSEQ_OK);
  const auto j = s.json();
  EXPECT_EQ(j["command"], "pages");
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["order"], "yx");
  EXPECT_EQ(j["stable_from"], 3);
  EXPECT_EQ(j["pages"][2]["d_rank"], 1);
  EXPECT_EQ(j["pages"][3]["dim"], 0);
}

TEST(CApi, NullArguments) {
  Out s;
  EXPECT_EQ(dsseq_pages(nullptr, DSSEQ_ORDER_YX, -1, DSSEQ_TEXT, &s.s), DSSEQ_INVALID_ARGUMENT);
  EXPECT_EQ(s.s, nullptr);
  EXPECT_EQ(dsseq_module_parse(nullptr, nullptr), DSSEQ_INVALID_ARGUMENT);
  Mod m("P");
  EXPECT_EQ(dsseq_decompose(m.m, DSSEQ_TEXT, nullptr), DSSEQ_INVALID_ARGUMENT);
  EXPECT_EQ(dsseq_homs(m.m, nullptr, DSSEQ_GL, DSSEQ_TEXT, &s.s), DSSEQ_INVALID_ARGUMENT);
  EXPECT_EQ(dsseq_arc(nullptr, DSSEQ_TEXT, &s.s), DSSEQ_INVALID_ARGUMENT);
  dsseq_string_free(nullptr);
}

TEST(CApi, BadListIsInvalidArgument) {
  Out s;
  EXPECT_EQ(dsseq_lr("2,x", "1", "3", DSSEQ_TEXT, &s.s), DSSEQ_INVALID_ARGUMENT);
  EXPECT_EQ(s.s, nullptr);
}

TEST(CApi, LittlewoodRichardson) {
  Out s;
  ASSERT_EQ(dsseq_lr("2,1", "2,1", "3,2,1", DSSEQ_JSON, &s.s), DSSEQ_OK);
  EXPECT_EQ(s.json()["coefficient"], 2);
}

TEST(CApi, SuitesAndVerify) {
  ASSERT_EQ(dsseq_suite_count(), 10u);
  EXPECT_STREQ(dsseq_suite_name(0), "pages");
  EXPECT_EQ(dsseq_suite_name(10), nullptr);
  EXPECT_EQ(dsseq_default_seed(), 20240611u);

  Out s;
  ASSERT_EQ(dsseq_verify("lr", dsseq_default_seed(), DSSEQ_JSON, &s.s), DSSEQ_OK) << s.s;
  const auto j = s.json();
  ASSERT_EQ(j["criteria"].size(), 1u);
  EXPECT_EQ(j["criteria"][0]["status"], "PASS");

  Out t;
  EXPECT_EQ(dsseq_verify("desk-scale", 1, DSSEQ_TEXT, &t.s), DSSEQ_VERIFICATION_FAILED);
  ASSERT_NE(t.s, nullptr);
  EXPECT_NE(std::string(t.s).find("NOT REPRODUCIBLE"), std::string::npos);
}
