// Exercises the shared library through its C header only.

#include <radial/radial.h>

#include <gtest/gtest.h>

#include <memory>
#include <string>

namespace {

struct SpecFree {
  void operator()(radial_spec* s) const { radial_spec_free(s); }
};
struct ReportFree {
  void operator()(radial_report* r) const { radial_report_free(r); }
};
using Spec = std::unique_ptr<radial_spec, SpecFree>;
using Report = std::unique_ptr<radial_report, ReportFree>;

Spec load(const char* source) {
  radial_spec* s = nullptr;
  EXPECT_EQ(radial_spec_load(source, &s), RADIAL_OK) << radial_last_error();
  return Spec(s);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  radial_string_free(s);
  return out;
}

std::string render(radial_report* r, radial_format f) {
  char* text = nullptr;
  EXPECT_EQ(radial_report_render(r, f, &text), RADIAL_OK);
  return take(text);
}

}  // namespace

TEST(CApi, SpecParameters) {
  auto spec = load("free:3");
  int m = 0, p = 0, free = 0;
  ASSERT_EQ(radial_spec_params(spec.get(), &m, &p, &free), RADIAL_OK);
  EXPECT_EQ(m, 6);
  EXPECT_EQ(p, 2);
  EXPECT_EQ(free, 1);
  char* json = nullptr;
  ASSERT_EQ(radial_spec_to_json(spec.get(), &json), RADIAL_OK);
  EXPECT_NE(take(json).find("free_group"), std::string::npos);
  EXPECT_STREQ(radial_version(), "0.1.0");
}

TEST(CApi, InlineAndFileSpecs) {
  auto inline_spec = load(R"({"variant":"free_product","factors":["cyclic:2","cyclic:2","cyclic:2"]})");
  char* count = nullptr;
  ASSERT_EQ(radial_word_count(inline_spec.get(), 8, &count), RADIAL_OK);
  EXPECT_EQ(take(count), "384");
  auto file_spec = load(RADIAL_TEST_DATA "/mixed_order4.json");
  int m = 0, p = 0;
  radial_spec_params(file_spec.get(), &m, &p, nullptr);
  EXPECT_EQ(m, 3);
  EXPECT_EQ(p, 4);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  radial_spec* s = nullptr;
  EXPECT_EQ(radial_spec_load("fp:1x2", &s), RADIAL_ERR_INPUT);
  EXPECT_EQ(s, nullptr);
  EXPECT_NE(std::string(radial_last_error()), "");
  EXPECT_EQ(radial_spec_load(RADIAL_TEST_DATA "/broken_table.json", &s), RADIAL_ERR_INPUT);
  EXPECT_EQ(radial_spec_load(nullptr, &s), RADIAL_ERR_INPUT);

  auto spec = load("fp:3x2");
  EXPECT_EQ(std::string(radial_last_error()), "");
  char* out = nullptr;
  EXPECT_EQ(radial_word_reduce(spec.get(), "[[5,1]]", &out), RADIAL_ERR_INPUT);
  EXPECT_EQ(radial_word_count(spec.get(), -1, &out), RADIAL_ERR_INPUT);
  radial_report* r = nullptr;
  EXPECT_EQ(radial_run_k0_check(spec.get(), 2, "[[0,1]]", "[[1,1],[0,1]]", 5, 0, &r), RADIAL_ERR_PRECONDITION);
  EXPECT_EQ(r, nullptr);
  EXPECT_EQ(radial_run_k0_check(spec.get(), 2, "[[0,1]]", "[[1,1],[0,1]]", 5, 1, &r), RADIAL_OK);
  radial_report_free(r);
  EXPECT_EQ(radial_report_passed(nullptr), 0);
}

TEST(CApi, WordOperations) {
  auto spec = load("fp:3x3");
  char* out = nullptr;
  ASSERT_EQ(radial_word_reduce(spec.get(), "[[0,1],[0,1],[1,2]]", &out), RADIAL_OK);
  EXPECT_EQ(take(out), "[[0,2],[1,2]]");
  ASSERT_EQ(radial_word_multiply(spec.get(), "[[0,2],[1,2]]", "[[1,1],[0,1]]", &out), RADIAL_OK);
  EXPECT_EQ(take(out), "[]");
  ASSERT_EQ(radial_word_inverse(spec.get(), "[[0,2],[1,1]]", &out), RADIAL_OK);
  EXPECT_EQ(take(out), "[[1,2],[0,1]]");
}

TEST(CApi, ReportsRenderInAllFormats) {
  auto spec = load("fp:3x2");
  radial_report* raw = nullptr;
  ASSERT_EQ(radial_run_defects(spec.get(), 1, "[[0,1]]", "[[1,1],[2,1]]", 3, &raw), RADIAL_OK);
  Report r(raw);
  EXPECT_EQ(radial_report_passed(r.get()), 1);
  EXPECT_NE(render(r.get(), RADIAL_FORMAT_CSV).find("\n1,3,41,216,41,648,"), std::string::npos);
  EXPECT_NE(render(r.get(), RADIAL_FORMAT_JSON).find("\"command\": \"defects\""), std::string::npos);
  EXPECT_NE(render(r.get(), RADIAL_FORMAT_TEXT).find("defects: PASS"), std::string::npos);
  char* text = nullptr;
  EXPECT_EQ(radial_report_render(r.get(), static_cast<radial_format>(9), &text), RADIAL_ERR_INPUT);
}

TEST(CApi, Campaigns) {
  auto spec = load("free:2");
  radial_report* raw = nullptr;
  ASSERT_EQ(radial_run_enumerate(spec.get(), 3, &raw), RADIAL_OK);
  Report enumerate(raw);
  EXPECT_EQ(radial_report_passed(enumerate.get()), 1);

  ASSERT_EQ(radial_run_verify(spec.get(), 2, 4, &raw), RADIAL_OK);
  Report verify(raw);
  EXPECT_EQ(radial_report_passed(verify.get()), 1);

  ASSERT_EQ(radial_run_conjugacy(spec.get(), "[[0,1]]", "[[0,1]]", RADIAL_MODE_PLAIN, 4, 2, &raw), RADIAL_OK);
  Report plain(raw);
  EXPECT_EQ(radial_report_passed(plain.get()), 0);

  ASSERT_EQ(radial_run_conjugacy(spec.get(), nullptr, nullptr, RADIAL_MODE_REDUCED_CONCAT, 4, 2, &raw), RADIAL_OK);
  Report reduced(raw);
  EXPECT_EQ(radial_report_passed(reduced.get()), 1);

  ASSERT_EQ(radial_run_nonzero_check(spec.get(), 2, "[[[0,1]],[[0,1]]]", 0, &raw), RADIAL_OK);
  Report nonzero(raw);
  EXPECT_EQ(radial_report_passed(nonzero.get()), 1);

  radial_report* v = nullptr;
  ASSERT_EQ(radial_validate(RADIAL_TEST_DATA "/broken_table.json", &v), RADIAL_OK);
  Report validate(v);
  EXPECT_EQ(radial_report_passed(validate.get()), 0);
}
