// Exercises the shared-library surface exactly as an external consumer
// would: opaque handles, JSON strings, status codes.
#include <doctest.h>

#include <cstring>
#include <string>

#include "fpg/fpg.h"

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out = text;
  fpg_string_free(text);
  return out;
}

struct SeriesHandle {
  fpg_series* p = nullptr;
  ~SeriesHandle() { fpg_series_free(p); }
};

struct Series2Handle {
  fpg_series2* p = nullptr;
  ~Series2Handle() { fpg_series2_free(p); }
};

}  // namespace

TEST_CASE("series lifecycle and shuffle through the C surface") {
  SeriesHandle a, b;
  REQUIRE(fpg_series_parse(R"({"max_degree": 4, "terms": {"0": "1"}})", &a.p) ==
          FPG_OK);
  REQUIRE(fpg_series_parse(R"({"max_degree": 4, "terms": {"1": "1"}})", &b.p) ==
          FPG_OK);
  CHECK(fpg_series_max_degree(a.p) == 4);

  SeriesHandle product;
  REQUIRE(fpg_shuffle(a.p, b.p, &product.p) == FPG_OK);
  char* text = nullptr;
  REQUIRE(fpg_series_format(product.p, &text) == FPG_OK);
  std::string json = take(text);
  CHECK(json.find("\"01\":\"1\"") != std::string::npos);
  CHECK(json.find("\"10\":\"1\"") != std::string::npos);
}

TEST_CASE("status codes and the error message channel") {
  fpg_series* s = nullptr;
  CHECK(fpg_series_parse("{bad json", &s) == FPG_INVALID_INPUT);
  CHECK(std::strlen(fpg_last_error()) > 0);
  CHECK(fpg_series_parse(nullptr, &s) == FPG_INVALID_INPUT);

  // Mismatched truncation degrees are a usage error, not a crash.
  SeriesHandle a, b;
  REQUIRE(fpg_series_parse(R"({"max_degree": 3, "terms": {}})", &a.p) == FPG_OK);
  REQUIRE(fpg_series_parse(R"({"max_degree": 4, "terms": {}})", &b.p) == FPG_OK);
  fpg_series* out = nullptr;
  CHECK(fpg_shuffle(a.p, b.p, &out) == FPG_INVALID_INPUT);

  // Post-group entry points validate the group refinement.
  Series2Handle not_group;
  REQUIRE(fpg_series2_parse(R"({"max_degree": 3, "e1": {}, "e2": {}})",
                            &not_group.p) == FPG_OK);
  fpg_series2* out2 = nullptr;
  CHECK(fpg_star_inv(not_group.p, &out2) == FPG_INVALID_INPUT);

  CHECK(fpg_word_wdeg("01") == 3);
  CHECK(fpg_word_wdeg("abc") == -1);
}

TEST_CASE("star inverse of [1, x1] through the C surface") {
  Series2Handle c;
  REQUIRE(fpg_series2_parse(
              R"({"max_degree": 6, "e1": {"": "1"}, "e2": {"1": "1"}})",
              &c.p) == FPG_OK);
  Series2Handle inv;
  REQUIRE(fpg_star_inv(c.p, &inv.p) == FPG_OK);
  char* text = nullptr;
  REQUIRE(fpg_series2_format(inv.p, &text) == FPG_OK);
  std::string json = take(text);
  CHECK(json.find("\"1\":\"-1\"") != std::string::npos);
  CHECK(json.find("\"01\":\"1\"") != std::string::npos);
  CHECK(json.find("\"001\":\"-1\"") != std::string::npos);
}

TEST_CASE("hopf tables through the C surface") {
  char* text = nullptr;
  REQUIRE(fpg_hopf_delta("x1:2", 5, &text) == FPG_OK);
  std::string delta = take(text);
  // Three tensor terms.
  CHECK(delta.find("[[\"1:1\"],[\":2\"],\"1\"]") != std::string::npos);
  CHECK(delta.find("[[],[\"1:2\"],\"1\"]") != std::string::npos);
  CHECK(delta.find("[[\"1:2\"],[],\"1\"]") != std::string::npos);

  REQUIRE(fpg_hopf_table(2, &text) == FPG_OK);
  CHECK(take(text).find("\"generators\"") != std::string::npos);

  CHECK(fpg_hopf_delta("x1:7", 5, &text) == FPG_INVALID_INPUT);
}

TEST_CASE("simulation and convergence reporting") {
  SeriesHandle c;
  REQUIRE(fpg_series_parse(R"({"max_degree": 2, "terms": {"1": "1"}})", &c.p) ==
          FPG_OK);
  Series2Handle d;
  REQUIRE(fpg_series2_parse(
              R"({"max_degree": 2, "e1": {"": "1"}, "e2": {"1": "1"}})",
              &d.p) == FPG_OK);
  const char* signal = R"({"h": 0.001, "values": [1, 1, 1, 1, 1, 1, 1, 1]})";
  char* text = nullptr;
  REQUIRE(fpg_feedback_sim(c.p, d.p, signal, 1e-10, 30, &text) == FPG_OK);
  CHECK(take(text).find("\"y\"") != std::string::npos);

  CHECK(fpg_feedback_sim(c.p, d.p, signal, 1e-18, 1, &text) ==
        FPG_NO_CONVERGENCE);

  SeriesHandle closed;
  REQUIRE(fpg_closed_loop_series(c.p, d.p, &closed.p) == FPG_OK);
}

TEST_CASE("verification reports through the C surface") {
  char* names = nullptr;
  REQUIRE(fpg_suite_names(&names) == FPG_OK);
  CHECK(take(names).find("postgroup") != std::string::npos);

  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(fpg_run_suite("cointeraction", 4, 1, 99, &a) == FPG_OK);
  REQUIRE(fpg_run_suite("cointeraction", 4, 1, 99, &b) == FPG_OK);
  std::string ra = take(a), rb = take(b);
  // Identical apart from the trailing wall-time field.
  ra.erase(ra.find("\"wall_ms\""));
  rb.erase(rb.find("\"wall_ms\""));
  CHECK(ra == rb);
  CHECK(ra.find("\"coverage\"") != std::string::npos);

  char* report = nullptr;
  CHECK(fpg_run_suite("no-such-suite", 0, 0, 1, &report) == FPG_INVALID_INPUT);
}
