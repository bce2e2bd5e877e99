#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "chenfliess.hpp"
#include "compose.hpp"
#include "errors.hpp"
#include "hopf.hpp"
#include "json_io.hpp"
#include "postgroup.hpp"
#include "postlie.hpp"
#include "version.hpp"

namespace fpg::verify {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Seeding and random input builders. Per-case seeds are pure functions of
// (master seed, check, case index), so sharding cases across workers cannot
// change any result; doubles are built from raw bits so streams do not
// depend on the standard library's distribution implementations.

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t master, std::string_view check,
                        std::uint64_t index) {
  std::uint64_t h = master;
  for (char c : check) h = splitmix64(h ^ static_cast<unsigned char>(c));
  return splitmix64(h ^ index);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int coeff() { return static_cast<int>(rng_() % 7) - 3; }        // {-3..3}
  int nonzero_coeff() {
    int sign = (rng_() % 2) ? 1 : -1;
    return sign * (1 + static_cast<int>(rng_() % 3));
  }
  std::size_t index(std::size_t bound) { return rng_() % bound; }
  double unit_real() {  // uniform in [-1, 1], platform-independent
    return static_cast<double>(rng_() >> 11) * 0x1p-52 - 1.0;
  }

  /// Sparse random polynomial: up to `max_terms` distinct words of
  /// wdeg <= degree with coefficients uniform in {-3..3} (zero draws thin
  /// the support further).
  Series series(int degree, std::size_t max_terms = 10, bool proper = false) {
    const auto& words = word_pool(degree);
    Series s(degree);
    for (std::size_t k = 0; k < max_terms; ++k) {
      const Word& w = words[index(words.size())];
      if (proper && w.empty()) continue;
      s.set(w, Rational(coeff()));
    }
    return s;
  }

  Series nonzero_constant_series(int degree) {
    Series s = series(degree, 8, true);
    s.set(Word(), Rational(nonzero_coeff()));
    return s;
  }

  /// Random group element: unit constant term plus random proper channel 1,
  /// random channel 2 (type invariants hold by construction).
  GroupElement group(int degree) {
    Series c1 = series(degree, 8, true);
    c1.set(Word(), Rational(1));
    Series c2 = series(degree - 1, 8);
    return GroupElement(Series2(std::move(c1), std::move(c2)));
  }

  Series2 series2(int degree) {
    return Series2(series(degree, 8), series(degree - 1, 8));
  }

  LieElement lie(int degree) {
    return LieElement(
        Series2(series(degree, 8, true), series(degree - 1, 8)));
  }

  /// Homogeneous element of the given channel-shifted grade.
  LieElement homogeneous_lie(int degree, int grade) {
    Series c1(degree), c2(degree - 1);
    for (const Word& w : Word::all_up_to_wdeg(degree)) {
      if (!w.empty() && w.wdeg() == grade) c1.set(w, Rational(coeff()));
      if (w.wdeg() + 1 == grade && w.wdeg() <= degree - 1)
        c2.set(w, Rational(coeff()));
    }
    return LieElement(Series2(std::move(c1), std::move(c2)));
  }

  Signal signal(double step, std::size_t steps) {
    Signal u;
    u.step = step;
    u.values.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) u.values.push_back(unit_real());
    return u;
  }

 private:
  static const std::vector<Word>& word_pool(int degree) {
    thread_local std::map<int, std::vector<Word>> pools;
    auto it = pools.find(degree);
    if (it == pools.end())
      it = pools.emplace(degree, Word::all_up_to_wdeg(degree)).first;
    return it->second;
  }

  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Failure reporting helpers.

std::string series_diff(const Series& a, const Series& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && ia->first < ib->first))
      return ia->first.to_string();
    if (ia == a.terms().end() || ib->first < ia->first)
      return ib->first.to_string();
    if (ia->second != ib->second) return ia->first.to_string();
    ++ia;
    ++ib;
  }
  return "none";
}

std::string series2_diff(const Series2& a, const Series2& b) {
  if (!(a.c1() == b.c1())) return "e1:" + series_diff(a.c1(), b.c1());
  if (!(a.c2() == b.c2())) return "e2:" + series_diff(a.c2(), b.c2());
  return "none";
}

struct Ctx {
  int degree;
  int cases;
  std::uint64_t seed;
  CheckResult result;

  std::uint64_t seed_for(std::uint64_t index) const {
    return case_seed(seed, result.name, index);
  }

  void fail(const json& inputs, const std::string& expected,
            const std::string& actual, const std::string& diff) {
    result.failures.push_back(
        Failure{result.name, inputs.dump(), expected, actual, diff});
  }

  void expect_series(const json& inputs, const Series& lhs, const Series& rhs) {
    ++result.cases_run;
    if (!(lhs == rhs))
      fail(inputs, series_to_json(rhs).dump(), series_to_json(lhs).dump(),
           series_diff(lhs, rhs));
  }

  void expect_series2(const json& inputs, const Series2& lhs,
                      const Series2& rhs) {
    ++result.cases_run;
    if (!(lhs == rhs))
      fail(inputs, series2_to_json(rhs).dump(), series2_to_json(lhs).dump(),
           series2_diff(lhs, rhs));
  }

  void expect_true(const json& inputs, bool ok, const std::string& what) {
    ++result.cases_run;
    if (!ok) fail(inputs, "true", "false", what);
  }

  void expect_rational(const json& inputs, const Rational& lhs,
                       const Rational& rhs, const std::string& where) {
    ++result.cases_run;
    if (lhs != rhs)
      fail(inputs, rational_to_string(rhs), rational_to_string(lhs), where);
  }

  void expect_near(const json& inputs, double value, double bound,
                   const std::string& what) {
    ++result.cases_run;
    if (!(std::abs(value) <= bound))
      fail(inputs, "<= " + std::to_string(bound), std::to_string(value), what);
  }
};

json case_inputs(const Ctx& ctx, std::uint64_t index) {
  return json{{"case", index}, {"seed", ctx.seed_for(index)}};
}

// ---------------------------------------------------------------------------
// shuffle suite (series-core invariants).

void check_shuffle_commutative(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree), b = g.series(ctx.degree);
    json in = case_inputs(ctx, i);
    in["a"] = series_to_json(a);
    in["b"] = series_to_json(b);
    ctx.expect_series(in, shuffle(a, b), shuffle(b, a));
  }
}

void check_shuffle_associative(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree), b = g.series(ctx.degree),
           c = g.series(ctx.degree);
    ctx.expect_series(case_inputs(ctx, i), shuffle(shuffle(a, b), c),
                      shuffle(a, shuffle(b, c)));
  }
}

void check_shuffle_unit(Ctx& ctx) {
  const Series unit = Series::constant(Rational(1), ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree);
    ctx.expect_series(case_inputs(ctx, i), shuffle(a, unit), a);
  }
}

void check_unshuffle_duality(Ctx& ctx) {
  const int word_bound = std::min(ctx.degree, 5);
  const auto words = Word::all_up_to_wdeg(word_bound);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree), b = g.series(ctx.degree);
    Series product = shuffle(a, b);
    for (const Word& w : words) {
      Rational paired(0);
      for (const auto& [split, coeff] : unshuffle(w))
        paired += coeff * a.at(split.first) * b.at(split.second);
      json in = case_inputs(ctx, i);
      in["word"] = w.to_string();
      ctx.expect_rational(in, paired, product.at(w), w.to_string());
    }
  }
}

void check_shuffle_grading(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    const int ga = 1 + static_cast<int>(g.index(
                       static_cast<std::size_t>(ctx.degree - 1)));
    const int gb = static_cast<int>(g.index(
        static_cast<std::size_t>(ctx.degree - ga + 1)));
    Series a(ctx.degree), b(ctx.degree);
    for (const Word& w : Word::all_up_to_wdeg(ctx.degree)) {
      if (w.wdeg() == ga) a.set(w, Rational(g.coeff()));
      if (w.wdeg() == gb) b.set(w, Rational(g.coeff()));
    }
    bool homogeneous = true;
    Series product = shuffle(a, b);
    for (const auto& [w, r] : product.terms())
      homogeneous = homogeneous && (w.wdeg() == ga + gb);
    json in = case_inputs(ctx, i);
    in["grades"] = json::array({ga, gb});
    ctx.expect_true(in, homogeneous, "shuffle not graded");
  }
}

void check_truncation_compat(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree), b = g.series(ctx.degree);
    const int lower = 1 + static_cast<int>(g.index(
                          static_cast<std::size_t>(ctx.degree)));
    json in = case_inputs(ctx, i);
    in["lower"] = lower;
    ctx.expect_series(in, shuffle(a, b).truncated_to(lower),
                      shuffle(a.truncated_to(lower), b.truncated_to(lower)));
    ctx.expect_series(in, add(a, b).truncated_to(lower),
                      add(a.truncated_to(lower), b.truncated_to(lower)));
    ctx.expect_series(in, scale(a, Rational(-7)).truncated_to(lower),
                      scale(a.truncated_to(lower), Rational(-7)));
    Series invertible = g.nonzero_constant_series(ctx.degree);
    ctx.expect_series(in, shuffle_inverse(invertible).truncated_to(lower),
                      shuffle_inverse(invertible.truncated_to(lower)));
  }
}

void check_shuffle_inverse_unit(Ctx& ctx) {
  const Series unit = Series::constant(Rational(1), ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.nonzero_constant_series(ctx.degree);
    json in = case_inputs(ctx, i);
    in["a"] = series_to_json(a);
    ctx.expect_series(in, shuffle(a, shuffle_inverse(a)), unit);
  }
  // Degenerate scalars and the rejected zero-constant case.
  Series two = Series::constant(Rational(2), ctx.degree);
  ctx.expect_series(json{{"case", "scalar"}}, shuffle_inverse(two),
                    Series::constant(make_rational(1, 2), ctx.degree));
  bool rejected = false;
  try {
    shuffle_inverse(Series::monomial(Word::from_string("1"), Rational(1),
                                     ctx.degree));
  } catch (const UsageError&) {
    rejected = true;
  }
  ctx.expect_true(json{{"case", "proper-input"}}, rejected,
                  "proper series must not be invertible");
}

void check_zero_series(Ctx& ctx) {
  const Series zero(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree);
    json in = case_inputs(ctx, i);
    ctx.expect_series(in, shuffle(a, zero), zero);
    ctx.expect_series(in, add(a, scale(a, Rational(-1))), zero);
  }
}

// ---------------------------------------------------------------------------
// group suite (composition laws, dot group, semidirect structure).

void check_mixed_distributivity(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree), b = g.series(ctx.degree);
    Series2 z = g.series2(ctx.degree);
    json in = case_inputs(ctx, i);
    in["z"] = series2_to_json(z);
    ctx.expect_series(in, mixed_compose(shuffle(a, b), z),
                      shuffle(mixed_compose(a, z), mixed_compose(b, z)));
  }
}

void check_mixed_associativity(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series e = g.series(ctx.degree), c = g.series(ctx.degree);
    Series2 d = g.series2(ctx.degree);
    ctx.expect_series(case_inputs(ctx, i), compose(e, mixed_compose(c, d)),
                      mixed_compose(compose(e, c), d));
  }
}

void check_composition_filtration(Ctx& ctx) {
  const auto words = Word::all_up_to_wdeg(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series d = g.series(ctx.degree);
    Series2 d2 = g.series2(ctx.degree);
    const Word& w = words[g.index(words.size())];
    Series unit_word = Series::monomial(w, Rational(1), ctx.degree);
    bool filtered = true;
    Series composed = compose(unit_word, d);
    for (const auto& [out_w, r] : composed.terms())
      filtered = filtered && (out_w.wdeg() >= w.wdeg());
    Series mixed = mixed_compose(unit_word, d2);
    for (const auto& [out_w, r] : mixed.terms())
      filtered = filtered && (out_w.wdeg() >= w.wdeg());
    json in = case_inputs(ctx, i);
    in["word"] = w.to_string();
    ctx.expect_true(in, filtered, "composition lowered the weighted degree");

    // Truncation compatibility: the result depends only on input terms up
    // to the truncation bound.
    const int lower =
        1 + static_cast<int>(g.index(static_cast<std::size_t>(ctx.degree)));
    Series c = g.series(ctx.degree);
    ctx.expect_series(in, compose(c, d).truncated_to(lower),
                      compose(c.truncated_to(lower), d.truncated_to(lower)));
    if (lower >= 1) {
      Series2 d2_low(d2.c1().truncated_to(lower),
                     d2.c2().truncated_to(std::max(lower - 1, 0)));
      ctx.expect_series(in, mixed_compose(c, d2).truncated_to(lower),
                        mixed_compose(c.truncated_to(lower), d2_low));
    }
  }
}

void check_composition_linearity(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series a = g.series(ctx.degree), b = g.series(ctx.degree),
           d = g.series(ctx.degree);
    Series2 d2 = g.series2(ctx.degree);
    const Rational lambda(g.coeff());
    Series combo = add(a, scale(b, lambda));
    ctx.expect_series(case_inputs(ctx, i), compose(combo, d),
                      add(compose(a, d), scale(compose(b, d), lambda)));
    ctx.expect_series(case_inputs(ctx, i), mixed_compose(combo, d2),
                      add(mixed_compose(a, d2),
                          scale(mixed_compose(b, d2), lambda)));
  }
}

void check_dot_associativity(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement a = g.group(ctx.degree), b = g.group(ctx.degree),
                 c = g.group(ctx.degree);
    ctx.expect_series2(case_inputs(ctx, i),
                       dot_mul(dot_mul(a, b), c).value(),
                       dot_mul(a, dot_mul(b, c)).value());
  }
}

void check_dot_unit_inverse(Ctx& ctx) {
  const GroupElement e = GroupElement::identity(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree);
    GroupElement inv = dot_inv(c);
    json in = case_inputs(ctx, i);
    in["c"] = series2_to_json(c.value());
    ctx.expect_series2(in, dot_mul(c, e).value(), c.value());
    ctx.expect_series2(in, dot_mul(e, c).value(), c.value());
    ctx.expect_series2(in, dot_mul(c, inv).value(), e.value());
    ctx.expect_series2(in, dot_mul(inv, c).value(), e.value());
  }
}

void check_pi1_homomorphism(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree), d = g.group(ctx.degree);
    ctx.expect_series(case_inputs(ctx, i), pi1(dot_mul(c, d)),
                      shuffle(pi1(c), pi1(d)));
  }
}

void check_embed_section(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series v = g.series(ctx.degree - 1), w = g.series(ctx.degree - 1);
    json in = case_inputs(ctx, i);
    // Monomorphism of the additive group.
    ctx.expect_series2(in, dot_mul(embed(v), embed(w)).value(),
                       embed(add(v, w)).value());
    ctx.expect_series(in, pi1(embed(v)),
                      Series::constant(Rational(1), ctx.degree));
    // The image is normal: conjugates stay in it.
    GroupElement c = g.group(ctx.degree);
    GroupElement conj = dot_mul(dot_mul(c, embed(v)), dot_inv(c));
    ctx.expect_series(in, pi1(conj),
                      Series::constant(Rational(1), ctx.degree));
  }
}

// ---------------------------------------------------------------------------
// postgroup suite.

void check_postgroup_axiom_i(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement x = g.group(ctx.degree), y = g.group(ctx.degree),
                 d = g.group(ctx.degree);
    json in = case_inputs(ctx, i);
    in["x"] = series2_to_json(x.value());
    in["y"] = series2_to_json(y.value());
    in["d"] = series2_to_json(d.value());
    ctx.expect_series2(in, triangle(dot_mul(x, y), d).value(),
                       dot_mul(triangle(x, d), triangle(y, d)).value());
  }
}

void check_postgroup_axiom_ii(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree), d = g.group(ctx.degree),
                 h = g.group(ctx.degree);
    ctx.expect_series2(case_inputs(ctx, i),
                       triangle(triangle(c, d), h).value(),
                       triangle(c, dot_mul(triangle(d, h), h)).value());
  }
}

void check_triangle_units(Ctx& ctx) {
  const GroupElement e = GroupElement::identity(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement d = g.group(ctx.degree);
    json in = case_inputs(ctx, i);
    ctx.expect_series2(in, triangle(d, e).value(), d.value());
    ctx.expect_series2(in, triangle(e, d).value(), e.value());
  }
}

void check_star_associativity(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement a = g.group(ctx.degree), b = g.group(ctx.degree),
                 c = g.group(ctx.degree);
    ctx.expect_series2(case_inputs(ctx, i),
                       star_mul(star_mul(a, b), c).value(),
                       star_mul(a, star_mul(b, c)).value());
  }
}

void check_star_unit(Ctx& ctx) {
  const GroupElement e = GroupElement::identity(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree);
    json in = case_inputs(ctx, i);
    ctx.expect_series2(in, star_mul(e, c).value(), c.value());
    ctx.expect_series2(in, star_mul(c, e).value(), c.value());
  }
}

void check_star_path_agreement(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree), d = g.group(ctx.degree);
    const int degree = ctx.degree;
    GroupElement via_action = dot_mul(triangle(c, d), d);
    Series c1d = mixed_compose(c.c1(), d.value());
    Series c2d = mixed_compose(c.c2().extended_to(degree), d.value())
                     .truncated_to(degree - 1);
    Series2 explicit_form(
        shuffle(c1d, d.c1()),
        add(c2d, shuffle(c1d.truncated_to(degree - 1), d.c2())));
    json in = case_inputs(ctx, i);
    in["c"] = series2_to_json(c.value());
    in["d"] = series2_to_json(d.value());
    ctx.expect_series2(in, via_action.value(), explicit_form);
  }
}

void check_star_inverse(Ctx& ctx) {
  const GroupElement e = GroupElement::identity(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree);
    GroupElement inv = star_inv(c);
    json in = case_inputs(ctx, i);
    in["c"] = series2_to_json(c.value());
    ctx.expect_series2(in, star_mul(c, inv).value(), e.value());
    ctx.expect_series2(in, star_mul(inv, c).value(), e.value());
  }
}

void check_r_tri_solve(Ctx& ctx) {
  const GroupElement e = GroupElement::identity(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement y = g.group(ctx.degree), d = g.group(ctx.degree);
    GroupElement x = r_tri_solve(y, d);
    json in = case_inputs(ctx, i);
    ctx.expect_series2(in, triangle(x, d).value(), y.value());
    ctx.expect_series2(in, r_tri_solve(e, d).value(), e.value());
    ctx.expect_series2(in, r_tri_solve(y, e).value(), y.value());
  }
}

void check_remark_identity(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement a = g.group(ctx.degree), b = g.group(ctx.degree);
    GroupElement lhs = star_mul(
        GroupElement(triangle(a.value(), star_inv(b).value())), b);
    ctx.expect_series2(case_inputs(ctx, i), lhs.value(),
                       dot_mul(a, b).value());
  }
}

void check_opposite_postgroup(Ctx& ctx) {
  // Opposite product a o b := b.a with action a <<| b = a.(a<|b).a^{-1}.
  auto opp_mul = [](const GroupElement& a, const GroupElement& b) {
    return dot_mul(b, a);
  };
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement a = g.group(ctx.degree), b = g.group(ctx.degree),
                 d = g.group(ctx.degree);
    json in = case_inputs(ctx, i);
    // Axiom (i): right action by d is an automorphism of (G, o).
    ctx.expect_series2(in, opposite_act(opp_mul(a, b), d).value(),
                       opp_mul(opposite_act(a, d), opposite_act(b, d)).value());
    // Axiom (ii): R_a o R_b = R_{(b <<| a) o a}.
    ctx.expect_series2(
        in, opposite_act(opposite_act(a, b), d).value(),
        opposite_act(a, opp_mul(opposite_act(b, d), d)).value());
  }
}

// ---------------------------------------------------------------------------
// postlie suite.

LieElement random_homogeneous(Gen& g, int degree) {
  const int grade = 1 + static_cast<int>(g.index(3));
  return g.homogeneous_lie(degree, grade);
}

void check_postlie_axioms(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    LieElement x = random_homogeneous(g, ctx.degree);
    LieElement y = random_homogeneous(g, ctx.degree);
    LieElement z = random_homogeneous(g, ctx.degree);
    ++ctx.result.cases_run;
    if (auto witness = check_post_lie(x, y, z)) {
      json in = case_inputs(ctx, i);
      in["x"] = series2_to_json(x.value());
      in["y"] = series2_to_json(y.value());
      in["z"] = series2_to_json(z.value());
      in["identity"] = witness->identity;
      ctx.fail(in, witness->right, witness->left, witness->first_difference);
    }
  }
}

void check_jacobi_lie(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    LieElement x = g.lie(ctx.degree), y = g.lie(ctx.degree),
               z = g.lie(ctx.degree);
    LieElement total = add(add(lie_bracket(lie_bracket(x, y), z),
                               lie_bracket(lie_bracket(y, z), x)),
                           lie_bracket(lie_bracket(z, x), y));
    ctx.expect_true(case_inputs(ctx, i), total.is_zero(),
                    "Jacobi failed for the dot bracket");
  }
}

void check_jacobi_derived(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    LieElement x = random_homogeneous(g, ctx.degree);
    LieElement y = random_homogeneous(g, ctx.degree);
    LieElement z = random_homogeneous(g, ctx.degree);
    LieElement total = add(add(derived_bracket(derived_bracket(x, y), z),
                               derived_bracket(derived_bracket(y, z), x)),
                           derived_bracket(derived_bracket(z, x), y));
    ctx.expect_true(case_inputs(ctx, i), total.is_zero(),
                    "Jacobi failed for the derived bracket");
  }
}

void check_bullet_prelie(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    LieElement x = random_homogeneous(g, ctx.degree);
    LieElement y = random_homogeneous(g, ctx.degree);
    LieElement z = random_homogeneous(g, ctx.degree);
    LieElement lhs = sub(bullet(bullet(x, y), z), bullet(x, bullet(y, z)));
    LieElement rhs = sub(bullet(bullet(x, z), y), bullet(x, bullet(z, y)));
    ctx.expect_series2(case_inputs(ctx, i), lhs.value(), rhs.value());
  }
}

void check_bullet_antisymmetrization(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    LieElement x = g.lie(ctx.degree), y = g.lie(ctx.degree);
    ctx.expect_series2(case_inputs(ctx, i),
                       sub(bullet(x, y), bullet(y, x)).value(),
                       derived_bracket(x, y).value());
  }
}

void check_act_linearization(Ctx& ctx) {
  // Exhaustive over basis pairs with total grade <= degree.
  std::vector<LieElement> basis;
  for (const Word& w : Word::all_up_to_wdeg(ctx.degree)) {
    if (!w.empty()) basis.push_back(LieElement::basis(w, 1, ctx.degree));
    if (w.wdeg() + 1 <= ctx.degree)
      basis.push_back(LieElement::basis(w, 2, ctx.degree));
  }
  auto grade = [](const LieElement& e) {
    if (!e.c1().is_zero()) return e.c1().terms().begin()->first.wdeg();
    return e.c2().terms().begin()->first.wdeg() + 1;
  };
  for (const LieElement& u : basis) {
    for (const LieElement& v : basis) {
      if (grade(u) + grade(v) > ctx.degree) continue;
      json in{{"u", series2_to_json(u.value())},
              {"v", series2_to_json(v.value())}};
      ctx.expect_series2(in, post_lie_act(u, v).value(),
                         linearize_action(u, v).value());
    }
  }
  // Plus random combinations.
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    LieElement u = g.lie(ctx.degree), v = g.lie(ctx.degree);
    json in = case_inputs(ctx, i);
    in["u"] = series2_to_json(u.value());
    in["v"] = series2_to_json(v.value());
    ctx.expect_series2(in, post_lie_act(u, v).value(),
                       linearize_action(u, v).value());
  }
}

void check_act_gradedness(Ctx& ctx) {
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    const int gu = 1 + static_cast<int>(g.index(3));
    const int gv = 1 + static_cast<int>(g.index(
                       static_cast<std::size_t>(
                           std::max(1, ctx.degree - gu))));
    LieElement u = g.homogeneous_lie(ctx.degree, gu);
    LieElement v = g.homogeneous_lie(ctx.degree, gv);
    auto is_homogeneous = [&](const LieElement& e, int expected) {
      for (const auto& [w, r] : e.c1().terms())
        if (w.wdeg() != expected) return false;
      for (const auto& [w, r] : e.c2().terms())
        if (w.wdeg() + 1 != expected) return false;
      return true;
    };
    json in = case_inputs(ctx, i);
    in["grades"] = json::array({gu, gv});
    ctx.expect_true(in, is_homogeneous(post_lie_act(u, v), gu + gv),
                    "post-Lie product not graded");
    ctx.expect_true(in, is_homogeneous(lie_bracket(u, v), gu + gv),
                    "Lie bracket not graded");
  }
}

// ---------------------------------------------------------------------------
// hopf-duality suite.

void check_hopf_grading(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  auto graded = [](const TensorElement& t, int expected) {
    for (const auto& [k, r] : t.terms())
      if (k.first.degree() + k.second.degree() != expected) return false;
    return true;
  };
  const auto gens = H.generators_up_to(ctx.degree);
  for (const Generator& g : gens) {
    json in{{"generator", g.to_string()}};
    ctx.expect_true(in, graded(H.delta(g), g.degree()), "delta not graded");
    TensorElement rho_g = H.rho(g);
    ctx.expect_true(in, graded(rho_g, g.degree()), "rho not graded");
    ctx.expect_true(in, graded(H.coproduct(g), g.degree()),
                    "coproduct not graded");
    bool left_linear = true;
    for (const auto& [k, r] : rho_g.terms())
      left_linear = left_linear && (k.first.factors().size() == 1 ||
                                    k.first.is_unit());
    ctx.expect_true(in, left_linear, "rho left leg is not linear");
  }
}

using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>;

void add_triple(Triple& t, const Monomial& a, const Monomial& b,
                const Monomial& c, const Rational& r) {
  if (r == 0) return;
  auto key = std::make_tuple(a, b, c);
  auto [it, inserted] = t.emplace(std::move(key), r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) t.erase(it);
  }
}

/// (map x id) t, where `map` expands the left monomial into a tensor.
template <typename MapFn>
Triple expand_left(const TensorElement& t, MapFn map) {
  Triple out;
  for (const auto& [k, r] : t.terms()) {
    const TensorElement expanded = map(k.first);
    for (const auto& [k2, r2] : expanded.terms())
      add_triple(out, k2.first, k2.second, k.second, r * r2);
  }
  return out;
}

/// (id x map) t, where `map` expands the right monomial into a tensor.
template <typename MapFn>
Triple expand_right(const TensorElement& t, MapFn map) {
  Triple out;
  for (const auto& [k, r] : t.terms()) {
    const TensorElement expanded = map(k.second);
    for (const auto& [k2, r2] : expanded.terms())
      add_triple(out, k.first, k2.first, k2.second, r * r2);
  }
  return out;
}

HElement as_element(const HopfAlgebra& H, const Monomial& m) {
  HElement h(H.max_degree());
  h.add_term(m, Rational(1));
  return h;
}

void check_coassociativity(Ctx& ctx, bool use_coproduct) {
  HopfAlgebra H(ctx.degree);
  auto cop = [&](const Monomial& m) {
    return use_coproduct ? H.coproduct(as_element(H, m))
                         : H.delta(as_element(H, m));
  };
  const auto gens = H.generators_up_to(ctx.degree);
  for (const Generator& g : gens) {
    const TensorElement base = use_coproduct ? H.coproduct(g) : H.delta(g);
    Triple left = expand_left(base, cop);
    Triple right = expand_right(base, cop);
    json in{{"generator", g.to_string()}};
    ctx.expect_true(in, left == right, "coassociativity failed");
  }
}

void check_delta_coassociative(Ctx& ctx) { check_coassociativity(ctx, false); }
void check_coproduct_coassociative(Ctx& ctx) {
  check_coassociativity(ctx, true);
}

void check_counit_laws(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  const auto gens = H.generators_up_to(ctx.degree);
  for (const Generator& g : gens) {
    for (bool use_coproduct : {false, true}) {
      const TensorElement t = use_coproduct ? H.coproduct(g) : H.delta(g);
      // (counit x id) and (id x counit) collapse the tensor back to g.
      HElement left(H.max_degree()), right(H.max_degree());
      for (const auto& [k, r] : t.terms()) {
        if (k.first.is_unit()) left.add_term(k.second, r);
        if (k.second.is_unit()) right.add_term(k.first, r);
      }
      const HElement expected = HElement::generator(g, H.max_degree());
      json in{{"generator", g.to_string()},
              {"coproduct", use_coproduct ? "Delta" : "delta"}};
      ctx.expect_true(in, left == expected && right == expected,
                      "counit law failed");
    }
  }
}

void check_hopf_morphisms(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  const auto gens = H.generators_up_to(ctx.degree);
  for (int i = 0; i < std::min(ctx.cases, 64); ++i) {
    Gen g(ctx.seed_for(i));
    const Generator& a = gens[g.index(gens.size())];
    const Generator& b = gens[g.index(gens.size())];
    if (a.degree() + b.degree() > ctx.degree) continue;
    HElement product = multiply(HElement::generator(a, ctx.degree),
                                HElement::generator(b, ctx.degree));
    json in{{"a", a.to_string()}, {"b", b.to_string()}};
    ctx.expect_true(in,
                    H.delta(product) == multiply(H.delta(a), H.delta(b)),
                    "delta is not multiplicative");
    ctx.expect_true(in, H.rho(product) == multiply(H.rho(a), H.rho(b)),
                    "rho is not multiplicative");
    ctx.expect_true(
        in, H.coproduct(product) == multiply(H.coproduct(a), H.coproduct(b)),
        "coproduct is not multiplicative");
  }
}

void check_comodule_coassociativity(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  const auto gens = H.generators_up_to(ctx.degree);
  for (const Generator& g : gens) {
    const TensorElement base = H.rho(g);
    Triple left = expand_left(
        base, [&](const Monomial& m) { return H.rho(as_element(H, m)); });
    Triple right = expand_right(base, [&](const Monomial& m) {
      return H.coproduct(as_element(H, m));
    });
    json in{{"generator", g.to_string()}};
    ctx.expect_true(in, left == right, "comodule coassociativity failed");
  }
}

void check_dualities(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  const auto gens = H.generators_up_to(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree), d = g.group(ctx.degree);
    GroupElement dot = dot_mul(c, d);
    GroupElement tri = triangle(c, d);
    GroupElement star = star_mul(c, d);
    for (const Generator& gen : gens) {
      const Series& dot_ch = gen.channel == 1 ? dot.c1() : dot.c2();
      const Series& tri_ch = gen.channel == 1 ? tri.c1() : tri.c2();
      const Series& star_ch = gen.channel == 1 ? star.c1() : star.c2();
      json in = case_inputs(ctx, i);
      in["generator"] = gen.to_string();
      ctx.expect_rational(in, H.pair(H.delta(gen), c, d), dot_ch.at(gen.word),
                          "delta duality: " + gen.to_string());
      ctx.expect_rational(in, H.pair(H.rho(gen), c, d), tri_ch.at(gen.word),
                          "rho duality: " + gen.to_string());
      ctx.expect_rational(in, H.pair(H.coproduct(gen), c, d),
                          star_ch.at(gen.word),
                          "coproduct duality: " + gen.to_string());
    }
  }
}

void enumerate_monomials(const std::vector<Generator>& gens, std::size_t from,
                         int budget, Monomial current,
                         std::vector<Monomial>& out) {
  out.push_back(current);
  for (std::size_t i = from; i < gens.size(); ++i) {
    if (gens[i].degree() > budget) continue;
    enumerate_monomials(gens, i, budget - gens[i].degree(),
                        current.times(Monomial(gens[i])), out);
  }
}

void check_antipode_convolution(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  const auto gens = H.generators_up_to(ctx.degree);
  std::vector<Monomial> monomials;
  enumerate_monomials(gens, 0, ctx.degree, Monomial::unit(), monomials);
  for (const Monomial& m : monomials) {
    // m(S x id) Delta(m) must collapse to counit(m) * unit.
    HElement folded(H.max_degree());
    const TensorElement cop = H.coproduct(as_element(H, m));
    for (const auto& [k, r] : cop.terms()) {
      HElement left = H.antipode(as_element(H, k.first));
      folded = add(folded,
                   scale(multiply(left, as_element(H, k.second)), r));
    }
    HElement expected(H.max_degree());
    if (m.is_unit()) expected.add_term(Monomial::unit(), Rational(1));
    json in{{"monomial", monomial_to_json(m).dump()}};
    ctx.expect_true(in, folded == expected, "antipode convolution failed");
  }
}

void check_antipode_star_inverse(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  const auto gens = H.generators_up_to(ctx.degree);
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    GroupElement c = g.group(ctx.degree);
    GroupElement inv = star_inv(c);
    for (const Generator& gen : gens) {
      const Series& ch = gen.channel == 1 ? inv.c1() : inv.c2();
      json in = case_inputs(ctx, i);
      in["generator"] = gen.to_string();
      ctx.expect_rational(in, H.evaluate(H.antipode(gen), c),
                          ch.at(gen.word),
                          "antipode/star-inverse: " + gen.to_string());
    }
  }
}

// ---------------------------------------------------------------------------
// cointeraction suite.

void check_coproduct_tables(Ctx& ctx) {
  HopfAlgebra H(std::max(ctx.degree, 3));
  const int D = H.max_degree();
  auto gen = [](const char* w, int ch) {
    return Generator(Word::from_string(w), ch);
  };
  auto mono = [&](std::initializer_list<Generator> gs) {
    Monomial m;
    for (const auto& g : gs) m = m.times(Monomial(g));
    return m;
  };

  // Delta(1 eps2) = unit x 1eps2 + 1eps2 x unit.
  TensorElement t1(D);
  t1.add_term(Monomial::unit(), mono({gen("", 2)}), Rational(1));
  t1.add_term(mono({gen("", 2)}), Monomial::unit(), Rational(1));
  ctx.expect_true(json{{"table", "1eps2"}}, H.coproduct(gen("", 2)) == t1,
                  "Delta(1eps2) table mismatch");

  // Delta(x1 eps1) = x1eps1 x unit + unit x x1eps1.
  TensorElement t2(D);
  t2.add_term(mono({gen("1", 1)}), Monomial::unit(), Rational(1));
  t2.add_term(Monomial::unit(), mono({gen("1", 1)}), Rational(1));
  ctx.expect_true(json{{"table", "x1eps1"}}, H.coproduct(gen("1", 1)) == t2,
                  "Delta(x1eps1) table mismatch");

  // Delta(x0 eps2) = x0eps2 x unit + unit x x0eps2 + x0eps1 x 1eps2
  //                + x1eps2 x 1eps2 + x1eps1 x (1eps2)^2.
  TensorElement t3(D);
  t3.add_term(mono({gen("0", 2)}), Monomial::unit(), Rational(1));
  t3.add_term(Monomial::unit(), mono({gen("0", 2)}), Rational(1));
  t3.add_term(mono({gen("0", 1)}), mono({gen("", 2)}), Rational(1));
  t3.add_term(mono({gen("1", 2)}), mono({gen("", 2)}), Rational(1));
  t3.add_term(mono({gen("1", 1)}), mono({gen("", 2), gen("", 2)}),
              Rational(1));
  ctx.expect_true(json{{"table", "x0eps2"}}, H.coproduct(gen("0", 2)) == t3,
                  "Delta(x0eps2) table mismatch");
}

void check_counits_coincide(Ctx& ctx) {
  HopfAlgebra H(ctx.degree);
  const GroupElement e = GroupElement::identity(ctx.degree);
  const auto gens = H.generators_up_to(ctx.degree);
  std::vector<Monomial> monomials;
  enumerate_monomials(gens, 0, ctx.degree, Monomial::unit(), monomials);
  for (const Monomial& m : monomials) {
    const HElement h = as_element(H, m);
    json in{{"monomial", monomial_to_json(m).dump()}};
    ctx.expect_rational(in, H.counit(h), H.evaluate(h, e),
                        "counits disagree");
  }
}

// ---------------------------------------------------------------------------
// numeric suite. Tolerances here are pinned from the acceptance table or,
// for the resampling-based laws, from the documented O(h^2) midpoint bound
// with a safety margin.

double sup_diff(const Trajectory& a, const Trajectory& b) {
  double worst = 0;
  for (std::size_t k = 0; k < a.y.size(); ++k)
    worst = std::max(worst, std::abs(a.y[k] - b.y[k]));
  return worst;
}

void check_numeric_shuffle_law(Ctx& ctx) {
  // Acceptance: D = 8, T = 0.2, h = 1e-3, sup error <= 1e-6. The operands
  // are polynomials, so their product is computed at full degree 2D and the
  // identity is exact up to rounding.
  const int degree = ctx.degree;
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series c = g.series(degree, 12), d = g.series(degree, 12);
    Signal u = g.signal(1e-3, 200);
    Series full =
        shuffle(c.extended_to(2 * degree), d.extended_to(2 * degree));
    IteratedIntegralTable table(u, 2 * degree);
    Trajectory lhs = evaluate_cf(full, table);
    Trajectory yc = evaluate_cf(c.extended_to(2 * degree), table);
    Trajectory yd = evaluate_cf(d.extended_to(2 * degree), table);
    double worst = 0;
    for (std::size_t k = 0; k < lhs.y.size(); ++k)
      worst = std::max(worst, std::abs(lhs.y[k] - yc.y[k] * yd.y[k]));
    json in = case_inputs(ctx, i);
    in["c"] = series_to_json(c);
    in["d"] = series_to_json(d);
    ctx.expect_near(in, worst, 1e-6, "shuffle law sup-norm discrepancy");
  }
}

void check_numeric_composition_law(Ctx& ctx) {
  // F_{c o d}[u] against F_c fed with the resampled F_d[u]. Operands are
  // kept small enough that the composition is exact at the working degree,
  // so the tolerance only covers midpoint resampling, O(h^2 T), with a wide
  // margin: 1e-5 at h = 1e-3, T = 0.2.
  const int work_degree = 16;
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series c = g.series(3, 4).extended_to(work_degree);
    Series d = g.series(2, 4).extended_to(work_degree);
    Signal u = g.signal(1e-3, 200);
    Series composed = compose(c, d);
    Trajectory lhs = evaluate_cf(composed, u);
    Trajectory inner = evaluate_cf(d, u);
    Trajectory rhs = evaluate_cf(c, resample(inner, u.step));
    json in = case_inputs(ctx, i);
    in["c"] = series_to_json(c.truncated_to(3));
    in["d"] = series_to_json(d.truncated_to(2));
    ctx.expect_near(in, sup_diff(lhs, rhs), 1e-5,
                    "composition law discrepancy");
  }
}

void check_numeric_mixed_composition_law(Ctx& ctx) {
  // F_{c |> d}[u] against F_c fed with u*F_{d1}[u] + F_{d2}[u]. The feed is
  // assembled channelwise (u is exactly piecewise constant; the smooth
  // channels are midpoint-resampled), same tolerance rationale as above.
  const int work_degree = 16;
  for (int i = 0; i < ctx.cases; ++i) {
    Gen g(ctx.seed_for(i));
    Series c = g.series(3, 4).extended_to(work_degree);
    Series2 d(add(g.series(2, 3).extended_to(work_degree - 1),
                  Series::constant(Rational(1), work_degree - 1))
                  .extended_to(work_degree),
              g.series(2, 3).extended_to(work_degree - 1));
    Signal u = g.signal(1e-3, 200);
    Series composed = mixed_compose(c, d);
    Trajectory lhs = evaluate_cf(composed, u);

    IteratedIntegralTable table(u, work_degree);
    Trajectory v1 = evaluate_cf(d.c1(), table);
    Trajectory v2 = evaluate_cf(d.c2().extended_to(work_degree), table);
    Signal feed;
    feed.step = u.step;
    feed.values.resize(u.steps());
    for (std::size_t k = 0; k < u.steps(); ++k)
      feed.values[k] = u.values[k] * 0.5 * (v1.y[k] + v1.y[k + 1]) +
                       0.5 * (v2.y[k] + v2.y[k + 1]);
    Trajectory rhs = evaluate_cf(c, feed);
    ctx.expect_near(case_inputs(ctx, i), sup_diff(lhs, rhs), 1e-5,
                    "mixed composition law discrepancy");
  }
}

void check_negative_control(Ctx& ctx) {
  // Stored counterexample: the componentwise triangle action is NOT the
  // composition of feed-forward operators. c = [1+x1, x0], d = [1, x1],
  // u = 1 on [0, 0.5]: the outputs differ by ~0.8 at the horizon.
  const int degree = 8;
  Series2 c(add(Series::constant(Rational(1), degree),
                Series::monomial(Word::from_string("1"), Rational(1), degree)),
            Series::monomial(Word::from_string("0"), Rational(1), degree - 1));
  Series2 d(Series::constant(Rational(1), degree),
            Series::monomial(Word::from_string("1"), Rational(1), degree - 1));
  Signal u{1e-3, std::vector<double>(500, 1.0)};

  Trajectory lhs = evaluate_ff(triangle(c, d), u);
  Trajectory inner = evaluate_ff(d, u);
  Trajectory rhs = evaluate_ff(c, resample(inner, u.step));
  const double gap = sup_diff(lhs, rhs);
  ++ctx.result.cases_run;
  if (!(gap >= 1e-3))
    ctx.fail(json{{"gap", gap}}, ">= 1e-3", std::to_string(gap),
             "counterexample gap collapsed");
}

void check_feedback_agreement(Ctx& ctx) {
  // c = x1, d = [1, x1], u = 1: the closed loop is the sinh pattern with
  // terms x0^{2k}x1 for 2k+1 <= 9 (weighted degree 4k+1, so the working
  // truncation is 17); simulation and series evaluation both agree with
  // sinh to 1e-6 on [0, 0.5].
  const int degree = 17;
  Series c = Series::monomial(Word::from_string("1"), Rational(1), degree);
  Series2 d(Series::constant(Rational(1), degree),
            Series::monomial(Word::from_string("1"), Rational(1), degree - 1));

  Series hat = closed_loop_series(c, d);
  Series expected(degree);
  for (int k = 0; 2 * k + 1 <= 9; ++k) {
    Word w;
    for (int j = 0; j < 2 * k; ++j) w = w.appended(Letter::x0);
    w = w.appended(Letter::x1);
    expected.set(w, Rational(1));
  }
  ctx.expect_series(json{{"case", "sinh-pattern"}}, hat, expected);

  Signal u{1e-4, std::vector<double>(5000, 1.0)};
  std::vector<double> changes;
  Series2 d_sim(Series::constant(Rational(1), 2),
                Series::monomial(Word::from_string("1"), Rational(1), 1));
  Trajectory sim = feedback_sim(c.truncated_to(2), d_sim, u, 1e-10, 30,
                                &changes);
  Trajectory series_eval = evaluate_cf(hat, u);
  double sim_err = 0, series_err = 0;
  for (std::size_t k = 0; k < sim.y.size(); ++k) {
    const double ref = std::sinh(sim.t[k]);
    sim_err = std::max(sim_err, std::abs(sim.y[k] - ref));
    series_err = std::max(series_err, std::abs(series_eval.y[k] - ref));
  }
  ctx.expect_near(json{{"case", "sim-vs-sinh"}}, sim_err, 1e-6,
                  "simulation drifted from sinh");
  ctx.expect_near(json{{"case", "series-vs-sinh"}}, series_err, 1e-6,
                  "closed-loop series drifted from sinh");
  ctx.expect_true(json{{"case", "picard-iterations"}},
                  changes.size() <= 30, "too many Picard iterations");

  // d = [1, beta]: the loop reproduces (1+beta)t to 1e-12.
  const double beta = 0.5;
  Series2 d_const(Series::constant(Rational(1), degree),
                  Series::constant(make_rational(1, 2), degree - 1));
  Signal u2{1e-3, std::vector<double>(500, 1.0)};
  Trajectory affine = feedback_sim(c, d_const, u2, 1e-12, 30);
  double affine_err = 0;
  for (std::size_t k = 0; k < affine.y.size(); ++k)
    affine_err = std::max(affine_err,
                          std::abs(affine.y[k] - (1 + beta) * affine.t[k]));
  ctx.expect_near(json{{"case", "affine-constant"}}, affine_err, 1e-12,
                  "constant feedback case drifted");

  // Trivial feedback: d = e leaves the plant response unchanged.
  Series2 e_fb(Series::constant(Rational(1), degree), Series(degree - 1));
  Trajectory open_loop = evaluate_cf(c, u2);
  Trajectory with_e = feedback_sim(c, e_fb, u2, 1e-12, 30);
  ctx.expect_near(json{{"case", "identity-feedback"}},
                  sup_diff(open_loop, with_e), 1e-12,
                  "identity feedback altered the output");
}

void check_picard_contraction(Ctx& ctx) {
  const int degree = 9;
  Series c = Series::monomial(Word::from_string("1"), Rational(1), degree);
  Series2 d(Series::constant(Rational(1), degree),
            Series::monomial(Word::from_string("1"), Rational(1), degree - 1));
  Signal u{1e-3, std::vector<double>(500, 1.0)};
  std::vector<double> changes;
  feedback_sim(c, d, u, 1e-10, 30, &changes);
  bool monotone = true;
  for (std::size_t k = 1; k < changes.size(); ++k)
    monotone = monotone &&
               (changes[k] <= changes[k - 1] * (1 + 1e-9) || changes[k] < 1e-12);
  ctx.expect_true(json{{"changes", changes}}, monotone,
                  "Picard sup-norm changes are not contracting");
}

// ---------------------------------------------------------------------------
// Registry.

struct CheckDef {
  const char* name;
  const char* suite;
  void (*fn)(Ctx&);
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"shuffle-commutative", "shuffle", check_shuffle_commutative},
      {"shuffle-associative", "shuffle", check_shuffle_associative},
      {"shuffle-unit", "shuffle", check_shuffle_unit},
      {"unshuffle-duality", "shuffle", check_unshuffle_duality},
      {"shuffle-grading", "shuffle", check_shuffle_grading},
      {"truncation-compat", "shuffle", check_truncation_compat},
      {"shuffle-inverse-unit", "shuffle", check_shuffle_inverse_unit},
      {"zero-series", "shuffle", check_zero_series},

      {"mixed-shuffle-distributivity", "group", check_mixed_distributivity},
      {"mixed-associativity", "group", check_mixed_associativity},
      {"composition-filtration", "group", check_composition_filtration},
      {"composition-linearity", "group", check_composition_linearity},
      {"dot-associativity", "group", check_dot_associativity},
      {"dot-unit-inverse", "group", check_dot_unit_inverse},
      {"pi1-homomorphism", "group", check_pi1_homomorphism},
      {"embed-section", "group", check_embed_section},

      {"postgroup-axiom-i", "postgroup", check_postgroup_axiom_i},
      {"postgroup-axiom-ii", "postgroup", check_postgroup_axiom_ii},
      {"triangle-units", "postgroup", check_triangle_units},
      {"star-associativity", "postgroup", check_star_associativity},
      {"star-unit", "postgroup", check_star_unit},
      {"star-path-agreement", "postgroup", check_star_path_agreement},
      {"star-inverse", "postgroup", check_star_inverse},
      {"r-tri-solve", "postgroup", check_r_tri_solve},
      {"remark-identity", "postgroup", check_remark_identity},
      {"opposite-postgroup", "postgroup", check_opposite_postgroup},

      {"postlie-axioms", "postlie", check_postlie_axioms},
      {"jacobi-lie", "postlie", check_jacobi_lie},
      {"jacobi-derived", "postlie", check_jacobi_derived},
      {"bullet-prelie", "postlie", check_bullet_prelie},
      {"bullet-antisymmetrization", "postlie",
       check_bullet_antisymmetrization},
      {"act-linearization", "postlie", check_act_linearization},
      {"act-gradedness", "postlie", check_act_gradedness},

      {"hopf-grading", "hopf-duality", check_hopf_grading},
      {"delta-coassociativity", "hopf-duality", check_delta_coassociative},
      {"coproduct-coassociativity", "hopf-duality",
       check_coproduct_coassociative},
      {"counit-laws", "hopf-duality", check_counit_laws},
      {"hopf-morphisms", "hopf-duality", check_hopf_morphisms},
      {"comodule-coassociativity", "hopf-duality",
       check_comodule_coassociativity},
      {"dualities", "hopf-duality", check_dualities},
      {"antipode-convolution", "hopf-duality", check_antipode_convolution},
      {"antipode-star-inverse", "hopf-duality", check_antipode_star_inverse},

      {"coproduct-tables", "cointeraction", check_coproduct_tables},
      {"counits-coincide", "cointeraction", check_counits_coincide},

      {"numeric-shuffle-law", "numeric", check_numeric_shuffle_law},
      {"numeric-composition-law", "numeric", check_numeric_composition_law},
      {"numeric-mixed-composition-law", "numeric",
       check_numeric_mixed_composition_law},
      {"negative-control", "numeric", check_negative_control},
      {"feedback-agreement", "numeric", check_feedback_agreement},
      {"picard-contraction", "numeric", check_picard_contraction},
  };
  return defs;
}

struct SuiteDefaults {
  int degree;
  int cases;
};

SuiteDefaults suite_defaults(const std::string& suite) {
  if (suite == "shuffle") return {6, 100};
  if (suite == "group") return {6, 200};
  if (suite == "postgroup") return {6, 200};
  if (suite == "postlie") return {5, 200};
  if (suite == "hopf-duality") return {5, 100};
  if (suite == "cointeraction") return {5, 1};
  if (suite == "numeric") return {8, 20};
  throw UsageError("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "shuffle",      "group",         "postgroup", "postlie",
      "hopf-duality", "cointeraction", "numeric"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> checks_in_suite(const std::string& suite) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  std::vector<std::string> out;
  for (const auto& def : registry())
    if (suite == def.suite) out.push_back(def.name);
  return out;
}

CheckResult run_check(const std::string& check, int max_degree, int cases,
                      std::uint64_t seed) {
  for (const auto& def : registry()) {
    if (check != def.name) continue;
    Ctx ctx{max_degree, cases, seed, CheckResult{def.name, 0, {}}};
    def.fn(ctx);
    return std::move(ctx.result);
  }
  throw UsageError("unknown check '" + check + "'");
}

Report run_suite(const SuiteSpec& spec) {
  if (!is_suite(spec.suite)) throw UsageError("unknown suite '" + spec.suite + "'");
  const SuiteDefaults defaults = suite_defaults(spec.suite);
  SuiteSpec resolved = spec;
  if (resolved.max_degree <= 0) resolved.max_degree = defaults.degree;
  if (resolved.cases <= 0) resolved.cases = defaults.cases;
  if (resolved.max_degree < 2)
    throw UsageError("suites need max_degree >= 2");

  Report report;
  report.spec = resolved;
  report.library_version = kLibraryVersion;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& def : registry()) {
    if (resolved.suite != def.suite) continue;
    report.checks.push_back(def.name);
    CheckResult result =
        run_check(def.name, resolved.max_degree, resolved.cases, resolved.seed);
    report.cases_run += result.cases_run;
    for (auto& f : result.failures) report.failures.push_back(std::move(f));
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

nlohmann::json coverage_map() {
  // Module invariant -> owning suite/check; exactly one suite per invariant.
  return json{
      {"series-core/shuffle-commutative-associative",
       "shuffle/shuffle-commutative,shuffle-associative"},
      {"series-core/unit-law", "shuffle/shuffle-unit"},
      {"series-core/unshuffle-duality", "shuffle/unshuffle-duality"},
      {"series-core/grading-and-truncation",
       "shuffle/shuffle-grading,truncation-compat"},
      {"series-core/shuffle-inverse", "shuffle/shuffle-inverse-unit"},
      {"series-core/zero-series-legal", "shuffle/zero-series"},
      {"composition/shuffle-distributivity",
       "group/mixed-shuffle-distributivity"},
      {"composition/mixed-associativity", "group/mixed-associativity"},
      {"composition/degree-filtration", "group/composition-filtration"},
      {"composition/left-linearity", "group/composition-linearity"},
      {"postgroup/dot-group-axioms", "group/dot-associativity,dot-unit-inverse"},
      {"postgroup/semidirect-structure",
       "group/pi1-homomorphism,embed-section"},
      {"postgroup/axiom-i", "postgroup/postgroup-axiom-i"},
      {"postgroup/axiom-ii", "postgroup/postgroup-axiom-ii"},
      {"postgroup/triangle-units", "postgroup/triangle-units"},
      {"postgroup/star-associativity-unit",
       "postgroup/star-associativity,star-unit"},
      {"postgroup/star-path-agreement", "postgroup/star-path-agreement"},
      {"postgroup/star-inverse", "postgroup/star-inverse,r-tri-solve"},
      {"postgroup/remark-1-identity", "postgroup/remark-identity"},
      {"postgroup/opposite-postgroup", "postgroup/opposite-postgroup"},
      {"postlie/oracle-equivalence", "postlie/act-linearization"},
      {"postlie/post-lie-axioms", "postlie/postlie-axioms"},
      {"postlie/jacobi", "postlie/jacobi-lie,jacobi-derived"},
      {"postlie/pre-lie-bullet",
       "postlie/bullet-prelie,bullet-antisymmetrization"},
      {"postlie/gradedness", "postlie/act-gradedness"},
      {"hopf/grading-preservation", "hopf-duality/hopf-grading"},
      {"hopf/bialgebra-laws",
       "hopf-duality/delta-coassociativity,coproduct-coassociativity,"
       "counit-laws,hopf-morphisms"},
      {"hopf/comodule-coassociativity",
       "hopf-duality/comodule-coassociativity"},
      {"hopf/dualities", "hopf-duality/dualities"},
      {"hopf/antipode",
       "hopf-duality/antipode-convolution,antipode-star-inverse"},
      {"hopf/cointeraction-tables", "cointeraction/coproduct-tables"},
      {"hopf/counit-identification", "cointeraction/counits-coincide"},
      {"chenfliess/shuffle-law", "numeric/numeric-shuffle-law"},
      {"chenfliess/composition-law", "numeric/numeric-composition-law"},
      {"chenfliess/mixed-composition-law",
       "numeric/numeric-mixed-composition-law"},
      {"chenfliess/negative-control", "numeric/negative-control"},
      {"chenfliess/feedback-agreement", "numeric/feedback-agreement"},
      {"chenfliess/picard-contraction", "numeric/picard-contraction"},
  };
}

nlohmann::json report_to_json(const Report& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"check", f.check},
                            {"inputs", f.inputs},
                            {"expected", f.expected},
                            {"actual", f.actual},
                            {"first_difference", f.first_difference}});
  }
  return json{{"suite", report.spec.suite},
              {"max_degree", report.spec.max_degree},
              {"cases", report.spec.cases},
              {"seed", report.spec.seed},
              {"library_version", report.library_version},
              {"checks", report.checks},
              {"cases_run", report.cases_run},
              {"failures", std::move(failures)},
              {"coverage", coverage_map()},
              {"wall_ms", report.wall_ms}};
}

}  // namespace fpg::verify
