// Acceptance gate: every criterion below runs with its pinned parameters
// and tolerance and prints one PASS/FAIL line; the exit code is the number
// of failed criteria. Algebraic criteria assert exact rational equality
// through the randomized verification checks; numerical criteria pin their
// tolerances here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "chenfliess.hpp"
#include "compose.hpp"
#include "postgroup.hpp"
#include "verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 20250810;

int failed_criteria = 0;

void report(int id, const std::string& title, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id,
              title.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  if (!pass) ++failed_criteria;
}

/// Runs named checks and accumulates (cases, failures).
struct CheckRun {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void add(const std::string& check, int degree, int case_count) {
    fpg::verify::CheckResult r =
        fpg::verify::run_check(check, degree, case_count, kSeed);
    cases += r.cases_run;
    failures += static_cast<int>(r.failures.size());
    if (first_failure.empty() && !r.failures.empty())
      first_failure = r.failures.front().check + " @ " +
                      r.failures.front().first_difference;
  }

  std::string summary() const {
    return std::to_string(cases) + " cases, " + std::to_string(failures) +
           " failures" +
           (first_failure.empty() ? "" : " (first: " + first_failure + ")");
  }
};

void criterion_1_postgroup_suite() {
  const auto start = std::chrono::steady_clock::now();
  CheckRun run;
  // Dot-group axioms (Thm 4.1 territory) plus the full post-group suite.
  run.add("dot-associativity", 6, 200);
  run.add("dot-unit-inverse", 6, 200);
  for (const auto& check : fpg::verify::checks_in_suite("postgroup"))
    run.add(check, 6, 200);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool in_budget = secs <= 120.0;
  report(1,
         "post-group/dot-group/star/opposite axioms, 200 cases at D=6, "
         "exact, <= 2 min",
         run.failures == 0 && in_budget,
         run.summary() + ", " + std::to_string(secs) + "s");
}

void criterion_2_star_paths() {
  CheckRun run;
  run.add("star-path-agreement", 6, 200);
  report(2, "star product path agreement, 200 cases at D=6, exact",
         run.failures == 0, run.summary());
}

void criterion_3_star_inverse() {
  CheckRun run;
  run.add("star-inverse", 6, 100);

  // The [1, x1] inverse matches sum (-1)^{k+1} x0^k x1 through D = 6.
  using namespace fpg;
  const int D = 6;
  Series2 c_val(D);
  c_val.c1().set(Word(), Rational(1));
  c_val.c2().set(Word::from_string("1"), Rational(1));
  GroupElement inv = star_inv(GroupElement(c_val));
  Series expected(D - 1);
  Word w = Word::from_string("1");
  int sign = -1;
  while (w.wdeg() <= D - 1) {
    expected.set(w, Rational(sign));
    w = w.prepended(Letter::x0);
    sign = -sign;
  }
  const bool pattern_ok =
      inv.c2() == expected && inv.c1() == Series::constant(Rational(1), D);
  report(3, "star inverse two-sided, 100 cases at D=6; [1,x1] pattern",
         run.failures == 0 && pattern_ok, run.summary());
}

void criterion_4_composition_laws() {
  CheckRun run;
  run.add("mixed-shuffle-distributivity", 6, 200);
  run.add("mixed-associativity", 6, 200);
  report(4, "composition laws (distributivity, mixed associativity), 200 "
            "cases at D=6, exact",
         run.failures == 0, run.summary());
}

void criterion_5_postlie() {
  CheckRun run;
  run.add("postlie-axioms", 5, 200);
  run.add("jacobi-lie", 5, 200);
  run.add("jacobi-derived", 5, 200);
  run.add("bullet-antisymmetrization", 5, 200);
  run.add("bullet-prelie", 5, 200);
  run.add("act-linearization", 5, 50);  // exhaustive basis pairs + extras
  report(5, "post-Lie axioms, Jacobi, pre-Lie bullet, antisymmetrization, "
            "oracle equivalence at D=5, exact",
         run.failures == 0, run.summary());
}

void criterion_6_hopf() {
  CheckRun run;
  for (const auto& check : fpg::verify::checks_in_suite("hopf-duality"))
    run.add(check, 5, 100);
  report(6, "Hopf suite: grading, coassociativity, counits, comodule, "
            "dualities on 100 pairs at D=5, antipode laws",
         run.failures == 0, run.summary());
}

void criterion_7_cointeraction() {
  CheckRun run;
  for (const auto& check : fpg::verify::checks_in_suite("cointeraction"))
    run.add(check, 5, 1);
  report(7, "cointeraction: Delta via (id x m)(rho x id)delta reproduces "
            "the three hand tables",
         run.failures == 0, run.summary());
}

void criterion_8_numeric_shuffle() {
  CheckRun run;
  run.add("numeric-shuffle-law", 8, 20);
  report(8, "numeric shuffle law, 20 pairs at D=8, T=0.2, h=1e-3, 1e-6",
         run.failures == 0, run.summary());
}

void criterion_9_feedback_closure() {
  CheckRun run;
  run.add("feedback-agreement", 9, 1);
  run.add("picard-contraction", 9, 1);
  report(9, "feedback closure: sinh pattern exact, Picard <= 30 iters at "
            "1e-10, both within 1e-6 of sinh; constant case to 1e-12",
         run.failures == 0, run.summary());
}

void criterion_10_negative_control() {
  CheckRun run;
  run.add("negative-control", 8, 1);
  report(10, "negative control: triangle action differs from operator "
             "composition by >= 1e-3",
         run.failures == 0, run.summary());
}

}  // namespace

int main() {
  criterion_1_postgroup_suite();
  criterion_2_star_paths();
  criterion_3_star_inverse();
  criterion_4_composition_laws();
  criterion_5_postlie();
  criterion_6_hopf();
  criterion_7_cointeraction();
  criterion_8_numeric_shuffle();
  criterion_9_feedback_closure();
  criterion_10_negative_control();
  if (failed_criteria == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion/criteria FAILED\n", failed_criteria);
  return failed_criteria;
}
