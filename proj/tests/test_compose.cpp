#include <doctest.h>

#include "compose.hpp"

using namespace fpg;

namespace {

Series word_series(const char* w, int degree) {
  return Series::monomial(Word::from_string(w), Rational(1), degree);
}

Series2 pair_series(const Series& c1, const Series& c2) {
  return Series2(c1, c2);
}

}  // namespace

TEST_CASE("composition product on words") {
  // x0 never consults the right argument.
  Series d = add(Series::constant(Rational(2), 8), word_series("10", 8));
  CHECK(compose(word_series("0", 8), d) == word_series("0", 8));

  // One unfolding of the x1 case.
  CHECK(compose(word_series("1", 8), word_series("1", 8)) ==
        word_series("01", 8));

  // x1x1 o x1 = x0(x1 sh x0x1), frozen from the shuffle oracle.
  Series lhs = compose(word_series("11", 8), word_series("1", 8));
  Series expected(8);
  expected.set(Word::from_string("0101"), Rational(1));
  expected.set(Word::from_string("0011"), Rational(2));
  CHECK(lhs == expected);

  CHECK_THROWS_AS(compose(Series(3), Series(4)), UsageError);
}

TEST_CASE("mixed composition product on words") {
  const int degree = 4;
  // Identity pair: d1 = 1, d2 = 0.
  Series2 e(Series::constant(Rational(1), degree), Series(degree - 1));
  Series eta = add(word_series("01", degree), word_series("1", degree));
  CHECK(mixed_compose(eta, e) == eta);

  // x1 |> [1, 1] = x1 + x0.
  Series2 d1(Series::constant(Rational(1), degree),
             Series::constant(Rational(1), degree - 1));
  CHECK(mixed_compose(word_series("1", degree), d1) ==
        add(word_series("1", degree), word_series("0", degree)));

  // x1 |> [1 + x1, x0] = x1 + x1x1 + x0x0.
  Series2 d2(add(Series::constant(Rational(1), degree),
                 word_series("1", degree)),
             word_series("0", degree - 1));
  Series expected = add(add(word_series("1", degree), word_series("11", degree)),
                        word_series("00", degree));
  CHECK(mixed_compose(word_series("1", degree), d2) == expected);
}

TEST_CASE("componentwise action and its units") {
  const int degree = 5;
  GroupElement e = GroupElement::identity(degree);
  Series2 d_val(add(Series::constant(Rational(1), degree),
                    word_series("1", degree)),
                word_series("0", degree - 1));
  GroupElement d(d_val);

  CHECK(triangle(e, d).value() == e.value());
  CHECK(triangle(d, e).value() == d.value());

  // [1, x1] <| [1, 1] = [1, x1 + x0].
  GroupElement c(pair_series(Series::constant(Rational(1), degree),
                             word_series("1", degree - 1)));
  GroupElement h(pair_series(Series::constant(Rational(1), degree),
                             Series::constant(Rational(1), degree - 1)));
  Series2 expected(Series::constant(Rational(1), degree),
                   add(word_series("1", degree - 1),
                       word_series("0", degree - 1)));
  CHECK(triangle(c, h).value() == expected);
}
