#include <doctest.h>

#include "postgroup.hpp"

using namespace fpg;

namespace {

Series word_series(const char* w, int degree) {
  return Series::monomial(Word::from_string(w), Rational(1), degree);
}

GroupElement make(const Series& c1, const Series& c2) {
  return GroupElement(Series2(c1, c2));
}

}  // namespace

TEST_CASE("dot product formulas") {
  const int D = 5;
  GroupElement e = GroupElement::identity(D);

  GroupElement c = make(Series::constant(Rational(1), D), word_series("1", D - 1));
  CHECK(dot_mul(c, e).value() == c.value());
  CHECK(dot_mul(e, c).value() == c.value());

  // [1, x1] . [1, 1] = [1, 1 + x1].
  GroupElement d = make(Series::constant(Rational(1), D),
                        Series::constant(Rational(1), D - 1));
  Series2 expected(Series::constant(Rational(1), D),
                   add(Series::constant(Rational(1), D - 1),
                       word_series("1", D - 1)));
  CHECK(dot_mul(c, d).value() == expected);

  // [1 + x1, 0] . [1, x0] = [1 + x1, x0 + x1x0 + x0x1].
  GroupElement a = make(add(Series::constant(Rational(1), D), word_series("1", D)),
                        Series(D - 1));
  GroupElement b = make(Series::constant(Rational(1), D), word_series("0", D - 1));
  Series bottom = add(add(word_series("0", D - 1), word_series("10", D - 1)),
                      word_series("01", D - 1));
  Series2 expected2(add(Series::constant(Rational(1), D), word_series("1", D)),
                    bottom);
  CHECK(dot_mul(a, b).value() == expected2);
}

TEST_CASE("dot inverse formulas") {
  const int D = 5;
  GroupElement e = GroupElement::identity(D);
  CHECK(dot_inv(e).value() == e.value());

  GroupElement c = make(Series::constant(Rational(1), D), word_series("1", D - 1));
  CHECK(dot_inv(c).value() ==
        Series2(Series::constant(Rational(1), D),
                scale(word_series("1", D - 1), Rational(-1))));

  GroupElement a = make(add(Series::constant(Rational(1), D), word_series("1", D)),
                        Series(D - 1));
  GroupElement inv = dot_inv(a);
  CHECK(inv.c1() == shuffle_inverse(a.c1()));
  CHECK(inv.c2().is_zero());
  CHECK(dot_mul(a, inv).value() == e.value());
}

TEST_CASE("star product and its inverse") {
  const int D = 6;
  GroupElement e = GroupElement::identity(D);

  GroupElement c = make(Series::constant(Rational(1), D), word_series("1", D - 1));
  GroupElement d = make(Series::constant(Rational(1), D),
                        Series::constant(Rational(1), D - 1));
  CHECK(star_mul(e, d).value() == d.value());
  CHECK(star_mul(c, e).value() == c.value());

  // [1, x1] * [1, 1] = [1, 1 + x0 + x1].
  Series bottom = add(add(Series::constant(Rational(1), D - 1),
                          word_series("0", D - 1)),
                      word_series("1", D - 1));
  CHECK(star_mul(c, d).value() ==
        Series2(Series::constant(Rational(1), D), bottom));

  // Constant additive channels form a subgroup: [1,a]*[1,b] = [1,a+b].
  GroupElement ca = make(Series::constant(Rational(1), D),
                         Series::constant(Rational(2), D - 1));
  GroupElement cb = make(Series::constant(Rational(1), D),
                         Series::constant(Rational(-5), D - 1));
  CHECK(star_mul(ca, cb).value() ==
        Series2(Series::constant(Rational(1), D),
                Series::constant(Rational(-3), D - 1)));
  CHECK(star_inv(ca).value() ==
        Series2(Series::constant(Rational(1), D),
                Series::constant(Rational(-2), D - 1)));

  // The [1, x1] inverse follows the alternating pattern sum (-1)^{k+1} x0^k x1.
  GroupElement inv = star_inv(c);
  Series pattern(D - 1);
  pattern.set(Word::from_string("1"), Rational(-1));
  pattern.set(Word::from_string("01"), Rational(1));
  pattern.set(Word::from_string("001"), Rational(-1));
  CHECK(inv.value() == Series2(Series::constant(Rational(1), D), pattern));
  CHECK(star_mul(c, inv).value() == e.value());
  CHECK(star_mul(inv, c).value() == e.value());
  CHECK(star_inv(e).value() == e.value());
}

TEST_CASE("triangle-action solver") {
  const int D = 5;
  GroupElement e = GroupElement::identity(D);
  GroupElement d = make(Series::constant(Rational(1), D),
                        Series::constant(Rational(1), D - 1));

  CHECK(r_tri_solve(e, d).value() == e.value());

  GroupElement y = make(Series::constant(Rational(1), D),
                        add(word_series("1", D - 1), word_series("0", D - 1)));
  CHECK(r_tri_solve(y, e).value() == y.value());

  // Inverts the triangle example: x <| [1, 1] = [1, x1 + x0] has x = [1, x1].
  GroupElement x = r_tri_solve(y, d);
  CHECK(x.value() ==
        Series2(Series::constant(Rational(1), D), word_series("1", D - 1)));
}

TEST_CASE("opposite post-group action") {
  const int D = 5;
  GroupElement e = GroupElement::identity(D);
  GroupElement b = make(Series::constant(Rational(1), D),
                        Series::constant(Rational(1), D - 1));
  GroupElement a = make(Series::constant(Rational(1), D), word_series("1", D - 1));

  CHECK(opposite_act(e, b).value() == e.value());
  CHECK(opposite_act(a, e).value() == a.value());

  // [1, x1] <<| [1, 1] = [1, x1 + x0].
  CHECK(opposite_act(a, b).value() ==
        Series2(Series::constant(Rational(1), D),
                add(word_series("1", D - 1), word_series("0", D - 1))));

  // The opposite action integrates to the same Grossman-Larson product.
  GroupElement g = make(add(Series::constant(Rational(1), D), word_series("0", D)),
                        word_series("1", D - 1));
  GroupElement h = make(add(Series::constant(Rational(1), D), word_series("1", D)),
                        word_series("0", D - 1));
  CHECK(dot_mul(h, opposite_act(g, h)).value() == star_mul(g, h).value());
}

TEST_CASE("semidirect structure maps") {
  const int D = 4;
  GroupElement c = make(add(Series::constant(Rational(1), D), word_series("1", D)),
                        word_series("0", D - 1));
  CHECK(pi1(c) == c.c1());
  CHECK(embed(word_series("1", D)).value() ==
        Series2(Series::constant(Rational(1), D + 1), word_series("1", D)));
}

TEST_CASE("group element validation") {
  Series2 bad(4);
  CHECK_THROWS_AS(GroupElement{bad}, UsageError);
  Series2 off(add(Series::constant(Rational(2), 4), Series(4)), Series(3));
  CHECK_THROWS_AS(GroupElement{off}, UsageError);
  CHECK_THROWS_AS(
      dot_mul(GroupElement::identity(4), GroupElement::identity(5)),
      UsageError);
}
