#include <doctest.h>

#include <cmath>

#include "chenfliess.hpp"

using namespace fpg;

namespace {

Series word_series(const char* w, int degree) {
  return Series::monomial(Word::from_string(w), Rational(1), degree);
}

Signal constant_signal(double value, double step, std::size_t steps) {
  return Signal{step, std::vector<double>(steps, value)};
}

}  // namespace

TEST_CASE("iterated integrals for piecewise-constant controls") {
  Signal u = constant_signal(1.0, 0.25, 4);
  IteratedIntegralTable table(u, 4);

  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(table.value(k, Word()) == doctest::Approx(1.0));

  // u = 1 on [0,1]: F_{x1}(1) = 1, F_{x1x1}(1) = 1/2 (U^2/2), exactly.
  CHECK(table.value(4, Word::from_string("1")) == doctest::Approx(1.0));
  CHECK(table.value(4, Word::from_string("11")) == doctest::Approx(0.5));
  CHECK(table.value(0, Word::from_string("1")) == 0.0);

  // Two-step control 1 then 2: F_{x1}(1) = U(1) = 0.5 + 1.0.
  Signal two{0.5, {1.0, 2.0}};
  IteratedIntegralTable table2(two, 2);
  CHECK(table2.value(2, Word::from_string("1")) == doctest::Approx(1.5));

  CHECK_THROWS_AS(table.value(4, Word::from_string("11111")), UsageError);
  CHECK_THROWS_AS(Signal{}.validate(), UsageError);
  CHECK_THROWS_AS((Signal{-1.0, {1.0}}).validate(), UsageError);
}

TEST_CASE("Chen-Fliess evaluation") {
  Signal u = constant_signal(0.7, 0.1, 10);

  // Constant series give constant output.
  Trajectory one = evaluate_cf(Series::constant(Rational(1), 4), u);
  for (double y : one.y) CHECK(y == doctest::Approx(1.0));

  // sum_k x0^k evaluates to exp(t) up to the truncation tail: F_{x0^k} is
  // t^k/k!, so through x0^5 the tail at t = 1 is sum_{k>5} 1/k! < 2e-3.
  Series exp_series(10);
  Word w;
  for (int k = 0; k <= 5; ++k) {
    exp_series.set(w, Rational(1));
    w = w.appended(Letter::x0);
  }
  Trajectory y = evaluate_cf(exp_series, constant_signal(0.3, 0.01, 100));
  CHECK(std::abs(y.y.back() - std::exp(1.0)) < 2e-3);

  Trajectory half = evaluate_cf(word_series("11", 4), constant_signal(1.0, 0.01, 100));
  CHECK(half.y.back() == doctest::Approx(0.5));
}

TEST_CASE("feed-forward evaluation") {
  Signal u{0.1, {1.0, -2.0, 0.5}};

  // Multiplicative identity channel reproduces the sampled control with the
  // left-value convention at the final point.
  Series2 id_pair(Series::constant(Rational(1), 3), Series(2));
  Trajectory as_u = evaluate_ff(id_pair, u);
  CHECK(as_u.y[0] == doctest::Approx(1.0));
  CHECK(as_u.y[1] == doctest::Approx(-2.0));
  CHECK(as_u.y[2] == doctest::Approx(0.5));
  CHECK(as_u.y[3] == doctest::Approx(0.5));

  // Pure additive channel is plain evaluation.
  Series2 additive(Series(3), word_series("1", 2));
  Trajectory lhs = evaluate_ff(additive, u);
  Trajectory rhs = evaluate_cf(word_series("1", 3), u);
  for (std::size_t k = 0; k < lhs.y.size(); ++k)
    CHECK(lhs.y[k] == doctest::Approx(rhs.y[k]));

  // [x1, 0] with u = 1 gives y(t) = t.
  Series2 ramp(word_series("1", 3), Series(2));
  Trajectory t = evaluate_ff(ramp, constant_signal(1.0, 0.25, 4));
  for (std::size_t k = 0; k < t.y.size(); ++k)
    CHECK(t.y[k] == doctest::Approx(t.t[k]));
}

TEST_CASE("feedback simulation") {
  const int D = 4;
  Series c = word_series("1", D);
  Signal u = constant_signal(1.0, 1e-3, 500);

  // Identity feedback pair leaves the open-loop response.
  Series2 e(Series::constant(Rational(1), D), Series(D - 1));
  Trajectory open_loop = evaluate_cf(c, u);
  Trajectory closed = feedback_sim(c, e, u, 1e-12, 10);
  for (std::size_t k = 0; k < closed.y.size(); ++k)
    CHECK(closed.y[k] == doctest::Approx(open_loop.y[k]).epsilon(1e-12));

  // Constant feedback: y = (1 + beta) t, exact per step.
  Series2 affine(Series::constant(Rational(1), D),
                 Series::constant(make_rational(1, 4), D - 1));
  Trajectory ramp = feedback_sim(c, affine, u, 1e-12, 10);
  for (std::size_t k = 0; k < ramp.y.size(); ++k)
    CHECK(std::abs(ramp.y[k] - 1.25 * ramp.t[k]) < 1e-12);

  // d = [1, x1] closes the loop y'' = y: sinh.
  Series2 d(Series::constant(Rational(1), D), word_series("1", D - 1));
  Trajectory sinh_traj = feedback_sim(c, d, u, 1e-10, 30);
  for (std::size_t k = 0; k < sinh_traj.y.size(); ++k)
    CHECK(std::abs(sinh_traj.y[k] - std::sinh(sinh_traj.t[k])) < 1e-6);

  // Exhausting the iteration budget raises a convergence error with the
  // residual attached.
  CHECK_THROWS_AS(feedback_sim(c, d, u, 1e-15, 1), ConvergenceError);
  try {
    feedback_sim(c, d, u, 1e-15, 1);
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 0);
  }
}

TEST_CASE("closed-loop generating series") {
  const int D = 9;
  Series c = word_series("1", D);

  Series2 e(Series::constant(Rational(1), D), Series(D - 1));
  CHECK(closed_loop_series(c, e) == c);

  // Constant feedback shifts x1 by beta x0 in one pass.
  Series2 affine(Series::constant(Rational(1), D),
                 Series::constant(Rational(2), D - 1));
  CHECK(closed_loop_series(c, affine) ==
        add(word_series("1", D), scale(word_series("0", D), Rational(2))));

  // d = [1, x1]: the alternating even-power pattern of sinh.
  Series2 d(Series::constant(Rational(1), D), word_series("1", D - 1));
  Series expected(D);
  expected.set(Word::from_string("1"), Rational(1));
  expected.set(Word::from_string("001"), Rational(1));
  expected.set(Word::from_string("00001"), Rational(1));
  CHECK(closed_loop_series(c, d) == expected);

  // The multiplicative feedback channel must have a unit constant term.
  Series2 bad(scale(Series::constant(Rational(2), D), Rational(1)), Series(D - 1));
  CHECK_THROWS_AS(closed_loop_series(c, bad), UsageError);
}
