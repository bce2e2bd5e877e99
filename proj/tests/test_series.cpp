#include <doctest.h>

#include <vector>

#include "series.hpp"

using namespace fpg;

namespace {

Series word_series(const char* w, int degree) {
  return Series::monomial(Word::from_string(w), Rational(1), degree);
}

// Independent shuffle oracle: enumerate every interleaving of u and v as a
// choice of positions for u's letters among |u|+|v| slots.
Series brute_shuffle_words(const Word& u, const Word& v, int degree) {
  Series out(degree);
  const std::size_t n = u.size() + v.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size())
      continue;
    Word w;
    std::size_t iu = 0, iv = 0;
    for (std::size_t k = 0; k < n; ++k)
      w = w.appended((mask >> k) & 1u ? u.at(iu++) : v.at(iv++));
    out.add_term(w, Rational(1));
  }
  return out;
}

}  // namespace

TEST_CASE("shuffle on the stated word pairs") {
  Series a = shuffle(word_series("0", 4), word_series("1", 4));
  CHECK(a.at(Word::from_string("01")) == 1);
  CHECK(a.at(Word::from_string("10")) == 1);
  CHECK(a.terms().size() == 2);

  Series b = shuffle(word_series("1", 4), word_series("1", 4));
  CHECK(b.at(Word::from_string("11")) == 2);
  CHECK(b.terms().size() == 1);

  // x1 sh x0x1: all three interleavings, frozen from the brute-force oracle.
  Series c = shuffle(word_series("1", 5), word_series("01", 5));
  CHECK(c == brute_shuffle_words(Word::from_string("1"),
                                 Word::from_string("01"), 5));
  CHECK(c.at(Word::from_string("101")) == 1);
  CHECK(c.at(Word::from_string("011")) == 2);
  CHECK(c.terms().size() == 2);
}

TEST_CASE("shuffle against the brute-force oracle on all small pairs") {
  const auto words = Word::all_up_to_wdeg(4);
  for (const Word& u : words) {
    for (const Word& v : words) {
      Series lhs = shuffle(Series::monomial(u, Rational(1), 8),
                           Series::monomial(v, Rational(1), 8));
      CHECK(lhs == brute_shuffle_words(u, v, 8));
    }
  }
}

TEST_CASE("unshuffle splits by position subsets") {
  WordTensor x1 = unshuffle(Word::from_string("1"));
  CHECK(x1.size() == 2);
  CHECK(x1.at({Word::from_string("1"), Word()}) == 1);
  CHECK(x1.at({Word(), Word::from_string("1")}) == 1);

  WordTensor empty = unshuffle(Word());
  CHECK(empty.size() == 1);
  CHECK(empty.at({Word(), Word()}) == 1);

  WordTensor x0x1 = unshuffle(Word::from_string("01"));
  CHECK(x0x1.size() == 4);
  CHECK(x0x1.at({Word::from_string("01"), Word()}) == 1);
  CHECK(x0x1.at({Word::from_string("0"), Word::from_string("1")}) == 1);
  CHECK(x0x1.at({Word::from_string("1"), Word::from_string("0")}) == 1);
  CHECK(x0x1.at({Word(), Word::from_string("01")}) == 1);
}

TEST_CASE("shuffle inverse") {
  const int degree = 3;
  Series unit = Series::constant(Rational(1), degree);

  CHECK(shuffle_inverse(unit) == unit);
  CHECK(shuffle_inverse(Series::constant(Rational(2), degree)) ==
        Series::constant(make_rational(1, 2), degree));

  Series c = add(unit, word_series("1", degree));
  Series inv = shuffle_inverse(c);
  // Multiplying back gives the unit (the defining property)...
  CHECK(shuffle(c, inv) == unit);
  // ...and the coefficients follow the alternating factorial pattern.
  CHECK(inv.at(Word()) == 1);
  CHECK(inv.at(Word::from_string("1")) == -1);
  CHECK(inv.at(Word::from_string("11")) == 2);
  CHECK(inv.at(Word::from_string("111")) == -6);

  CHECK_THROWS_AS(shuffle_inverse(word_series("1", degree)), UsageError);
  CHECK_THROWS_AS(shuffle_inverse(Series(degree)), UsageError);
}

TEST_CASE("linear-space operations") {
  Series s = add(Series::constant(Rational(1), 5),
                 scale(word_series("01", 5), Rational(3)));
  CHECK(s.at(Word::from_string("01")) == 3);

  CHECK(word_series("00", 4).truncated_to(3) == Series(3));
  Series one_plus = add(Series::constant(Rational(1), 4), word_series("00", 4));
  CHECK(one_plus.truncated_to(3) == Series::constant(Rational(1), 3));

  Series cancel = add(word_series("1", 4), scale(word_series("1", 4), Rational(-1)));
  CHECK(cancel.is_zero());
  CHECK(cancel.terms().empty());

  CHECK_THROWS_AS(add(Series(3), Series(4)), UsageError);
  CHECK_THROWS_AS(shuffle(Series(3), Series(4)), UsageError);
  CHECK_THROWS_AS(Series(4).truncated_to(5), UsageError);
  CHECK_THROWS_AS(Series(4).set(Word::from_string("111111"), Rational(1)),
                  UsageError);
}

TEST_CASE("term maps iterate in canonical order") {
  Series s(5);
  s.set(Word::from_string("10"), Rational(1));
  s.set(Word::from_string("1"), Rational(1));
  s.set(Word::from_string("01"), Rational(1));
  std::vector<std::string> seen;
  for (const auto& [w, r] : s.terms()) seen.push_back(w.to_string());
  CHECK(seen == std::vector<std::string>{"1", "01", "10"});
}
