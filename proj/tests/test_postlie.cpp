#include <doctest.h>

#include "postlie.hpp"

using namespace fpg;

namespace {

LieElement basis(const char* w, int channel, int degree = 5) {
  return LieElement::basis(Word::from_string(w), channel, degree);
}

}  // namespace

TEST_CASE("Lie bracket basis cases") {
  LieElement x1e1 = basis("1", 1);
  LieElement empty_e2 = basis("", 2);
  LieElement x0e1 = basis("0", 1);

  CHECK(lie_bracket(x1e1, empty_e2) == basis("1", 2));
  CHECK(lie_bracket(x1e1, x0e1).is_zero());
  CHECK(lie_bracket(empty_e2, x1e1) == scale(basis("1", 2), Rational(-1)));
  CHECK(lie_bracket(empty_e2, empty_e2).is_zero());
}

TEST_CASE("post-Lie product basis cases") {
  CHECK(post_lie_act(basis("", 2), basis("1", 1)).is_zero());
  CHECK(post_lie_act(basis("1", 1), basis("", 2)) == basis("0", 1));
  CHECK(post_lie_act(basis("01", 2), basis("1", 1)) == basis("011", 2));
}

TEST_CASE("derived bracket") {
  LieElement u = basis("1", 1);
  LieElement v = basis("", 2);
  CHECK(derived_bracket(u, u).is_zero());
  CHECK(derived_bracket(v, v).is_zero());
  CHECK(derived_bracket(u, v) == add(basis("0", 1), basis("1", 2)));
}

TEST_CASE("linearized Grossman-Larson product") {
  LieElement u = basis("1", 1);
  LieElement v = basis("", 2);
  CHECK(bullet(v, v).is_zero());
  CHECK(bullet(u, v) == add(basis("0", 1), basis("1", 2)));
  // Antisymmetrization gives back the derived bracket.
  CHECK(sub(bullet(u, v), bullet(v, u)) == derived_bracket(u, v));
}

TEST_CASE("linearization oracle matches the recursion") {
  CHECK(linearize_action(basis("1", 1), basis("", 2)) == basis("0", 1));
  CHECK(linearize_action(basis("", 2), basis("1", 1)).is_zero());
  CHECK(linearize_action(basis("", 2), basis("01", 2)).is_zero());
  CHECK(linearize_action(basis("01", 2), basis("1", 1)) == basis("011", 2));
}

TEST_CASE("post-Lie axiom checker") {
  LieElement zero = LieElement::zero(5);
  CHECK_FALSE(check_post_lie(basis("1", 1), basis("0", 1), zero).has_value());
  CHECK_FALSE(
      check_post_lie(basis("1", 1), basis("", 2), basis("", 2)).has_value());

  // A deliberately wrong identity produces a structured witness.
  AxiomWitness w{"demo", first_difference(basis("1", 1), basis("0", 1)),
                 "", ""};
  CHECK(w.first_difference == "1:0");
}

TEST_CASE("the empty-word e1 line is rejected") {
  CHECK_THROWS_AS(LieElement::basis(Word(), 1, 5), UsageError);
  Series2 bad(5);
  bad.c1().set(Word(), Rational(1));
  CHECK_THROWS_AS(LieElement{bad}, UsageError);
}
