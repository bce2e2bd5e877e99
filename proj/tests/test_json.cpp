#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "json_io.hpp"

using namespace fpg;

TEST_CASE("series round trip") {
  const char* text = R"({"max_degree": 4, "terms": {"": "1", "01": "-3/2"}})";
  Series s = series_from_json_text(text);
  CHECK(s.max_degree() == 4);
  CHECK(s.at(Word()) == 1);
  CHECK(s.at(Word::from_string("01")) == make_rational(-3, 2));
  Series again = series_from_json_text(series_to_json(s).dump());
  CHECK(again == s);
}

TEST_CASE("series parse diagnostics") {
  CHECK_THROWS_AS(series_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(series_from_json_text(R"({"terms": {}})"), ParseError);
  CHECK_THROWS_AS(
      series_from_json_text(R"({"max_degree": 2, "terms": {"2": "1"}})"),
      ParseError);
  CHECK_THROWS_AS(
      series_from_json_text(R"({"max_degree": 2, "terms": {"00": "1"}})"),
      ParseError);
  CHECK_THROWS_AS(
      series_from_json_text(R"({"max_degree": 2, "terms": {"1": "1/0"}})"),
      ParseError);
  CHECK_THROWS_AS(
      series_from_json_text(R"({"max_degree": 2, "terms": {"1": 3}})"),
      ParseError);
  // Zero coefficients parse but are not stored.
  Series z = series_from_json_text(R"({"max_degree": 2, "terms": {"1": "0"}})");
  CHECK(z.is_zero());
}

TEST_CASE("two-channel round trip enforces the channel grading") {
  const char* text =
      R"({"max_degree": 3, "e1": {"": "1", "1": "2"}, "e2": {"11": "1/3"}})";
  Series2 s = series2_from_json_text(text);
  CHECK(s.c1().max_degree() == 3);
  CHECK(s.c2().max_degree() == 2);
  CHECK(series2_from_json_text(series2_to_json(s).dump()) == s);

  // Channel-2 words live at wdeg <= D-1.
  CHECK_THROWS_AS(
      series2_from_json_text(R"({"max_degree": 3, "e2": {"10": "1"}})"),
      ParseError);
  CHECK_THROWS_AS(series2_from_json_text(R"({"max_degree": 0, "e1": {}})"),
                  ParseError);
}

TEST_CASE("signal and trajectory shapes") {
  Signal u = signal_from_json_text(R"({"h": 0.5, "values": [1, -1]})");
  CHECK(u.step == 0.5);
  CHECK(u.values.size() == 2);
  CHECK_THROWS_AS(signal_from_json_text(R"({"h": 0.5})"), ParseError);
  CHECK_THROWS_AS(signal_from_json_text(R"({"h": -1, "values": [1]})"),
                  UsageError);
  CHECK_THROWS_AS(signal_from_json_text(R"({"h": 0.1, "values": []})"),
                  UsageError);

  Trajectory t{{0.0, 0.5}, {1.0, 2.0}};
  nlohmann::json j = trajectory_to_json(t);
  CHECK(j["t"].size() == 2);
  CHECK(j["y"][1] == 2.0);
}

TEST_CASE("format/parse is the identity on random series") {
  std::mt19937_64 rng(2024);
  const auto words = Word::all_up_to_wdeg(6);
  for (int trial = 0; trial < 50; ++trial) {
    Series s(6);
    Series c2(5);
    for (int k = 0; k < 8; ++k) {
      const Word& w = words[rng() % words.size()];
      long num = static_cast<long>(rng() % 19) - 9;
      long den = 1 + static_cast<long>(rng() % 7);
      s.set(w, make_rational(num, den));
      if (w.wdeg() <= 5) c2.set(w, make_rational(num, den));
    }
    CHECK(series_from_json_text(series_to_json(s).dump()) == s);
    Series2 both(s, c2);
    CHECK(series2_from_json_text(series2_to_json(both).dump()) == both);
  }
}

TEST_CASE("hopf table rows carry all four maps") {
  nlohmann::json table = hopf_table_json(2);
  CHECK(table["max_degree"] == 2);
  // Degree <= 2 generators: x1:1, :2, x0:1, x1x1:1, 1:2.
  CHECK(table["generators"].size() == 5);
  for (const auto& row : table["generators"]) {
    CHECK(row.contains("generator"));
    CHECK(row.contains("delta"));
    CHECK(row.contains("rho"));
    CHECK(row.contains("coproduct"));
    CHECK(row.contains("antipode"));
  }
  CHECK(table["generators"][0]["generator"] == "1:1");
}
