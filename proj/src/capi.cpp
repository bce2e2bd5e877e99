#include "fpg/fpg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "chenfliess.hpp"
#include "compose.hpp"
#include "errors.hpp"
#include "hopf.hpp"
#include "json_io.hpp"
#include "postgroup.hpp"
#include "postlie.hpp"
#include "verify.hpp"
#include "version.hpp"

struct fpg_series {
  fpg::Series value;
};

struct fpg_series2 {
  fpg::Series2 value;
};

namespace {

thread_local std::string last_error;

void set_error(const std::string& message) { last_error = message; }

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

/// Runs the body, translating exceptions into status codes.
template <typename Fn>
fpg_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const fpg::ConvergenceError& e) {
    set_error(e.what());
    return FPG_NO_CONVERGENCE;
  } catch (const fpg::UsageError& e) {
    set_error(e.what());
    return FPG_INVALID_INPUT;
  } catch (const fpg::InternalError& e) {
    set_error(e.what());
    return FPG_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FPG_INTERNAL_ERROR;
  }
}

fpg_status require(const void* p, const char* what) {
  if (p != nullptr) return FPG_OK;
  set_error(std::string("null ") + what);
  return FPG_INVALID_INPUT;
}

fpg::GroupElement as_group(const fpg_series2* c) {
  return fpg::GroupElement(c->value);
}

fpg::LieElement as_lie(const fpg_series2* c) { return fpg::LieElement(c->value); }

fpg_status out_series(fpg::Series value, fpg_series** out) {
  *out = new fpg_series{std::move(value)};
  return FPG_OK;
}

fpg_status out_series2(fpg::Series2 value, fpg_series2** out) {
  *out = new fpg_series2{std::move(value)};
  return FPG_OK;
}

fpg_status out_string(const std::string& text, char** json_out) {
  *json_out = copy_string(text);
  if (*json_out == nullptr) {
    set_error("out of memory");
    return FPG_INTERNAL_ERROR;
  }
  return FPG_OK;
}

template <typename Op>
fpg_status binary_series(const fpg_series* a, const fpg_series* b,
                         fpg_series** out, Op op) {
  if (auto s = require(a, "series"); s != FPG_OK) return s;
  if (auto s = require(b, "series"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded([&] { return out_series(op(a->value, b->value), out); });
}

template <typename Op>
fpg_status binary_group(const fpg_series2* c, const fpg_series2* d,
                        fpg_series2** out, Op op) {
  if (auto s = require(c, "series2"); s != FPG_OK) return s;
  if (auto s = require(d, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series2(op(as_group(c), as_group(d)).value(), out); });
}

template <typename Op>
fpg_status binary_lie(const fpg_series2* u, const fpg_series2* v,
                      fpg_series2** out, Op op) {
  if (auto s = require(u, "series2"); s != FPG_OK) return s;
  if (auto s = require(v, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series2(op(as_lie(u), as_lie(v)).value(), out); });
}

template <typename Fn>
fpg_status hopf_map(const char* generator, int max_degree, char** json_out,
                    Fn fn) {
  if (auto s = require(generator, "generator"); s != FPG_OK) return s;
  if (auto s = require(json_out, "output"); s != FPG_OK) return s;
  return guarded([&] {
    fpg::Generator g = fpg::Generator::from_string(generator);
    fpg::HopfAlgebra algebra(std::max(max_degree, g.degree()));
    return out_string(fn(algebra, g).dump(), json_out);
  });
}

}  // namespace

extern "C" {

const char* fpg_version(void) { return fpg::kLibraryVersion; }

const char* fpg_last_error(void) { return last_error.c_str(); }

void fpg_string_free(char* text) { std::free(text); }

fpg_status fpg_series_parse(const char* json, fpg_series** out) {
  if (auto s = require(json, "json"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series(fpg::series_from_json_text(json), out); });
}

fpg_status fpg_series_format(const fpg_series* s, char** json_out) {
  if (auto st = require(s, "series"); st != FPG_OK) return st;
  if (auto st = require(json_out, "output"); st != FPG_OK) return st;
  return guarded(
      [&] { return out_string(fpg::series_to_json(s->value).dump(), json_out); });
}

void fpg_series_free(fpg_series* s) { delete s; }

int fpg_series_max_degree(const fpg_series* s) {
  return s == nullptr ? -1 : s->value.max_degree();
}

fpg_status fpg_series2_parse(const char* json, fpg_series2** out) {
  if (auto s = require(json, "json"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series2(fpg::series2_from_json_text(json), out); });
}

fpg_status fpg_series2_format(const fpg_series2* s, char** json_out) {
  if (auto st = require(s, "series2"); st != FPG_OK) return st;
  if (auto st = require(json_out, "output"); st != FPG_OK) return st;
  return guarded([&] {
    return out_string(fpg::series2_to_json(s->value).dump(), json_out);
  });
}

void fpg_series2_free(fpg_series2* s) { delete s; }

int fpg_series2_max_degree(const fpg_series2* s) {
  return s == nullptr ? -1 : s->value.max_degree();
}

int fpg_word_wdeg(const char* word) {
  if (word == nullptr) return -1;
  try {
    return fpg::Word::from_string(word).wdeg();
  } catch (const std::exception&) {
    return -1;
  }
}

fpg_status fpg_shuffle(const fpg_series* a, const fpg_series* b,
                       fpg_series** out) {
  return binary_series(a, b, out,
                       [](const auto& x, const auto& y) { return shuffle(x, y); });
}

fpg_status fpg_shuffle_inverse(const fpg_series* a, fpg_series** out) {
  if (auto s = require(a, "series"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded([&] { return out_series(fpg::shuffle_inverse(a->value), out); });
}

fpg_status fpg_unshuffle(const char* word, char** json_out) {
  if (auto s = require(word, "word"); s != FPG_OK) return s;
  if (auto s = require(json_out, "output"); s != FPG_OK) return s;
  return guarded([&] {
    fpg::WordTensor t = fpg::unshuffle(fpg::Word::from_string(word));
    return out_string(fpg::word_tensor_to_json(t).dump(), json_out);
  });
}

fpg_status fpg_series_add(const fpg_series* a, const fpg_series* b,
                          fpg_series** out) {
  return binary_series(a, b, out,
                       [](const auto& x, const auto& y) { return add(x, y); });
}

fpg_status fpg_series_scale(const fpg_series* a, const char* rational,
                            fpg_series** out) {
  if (auto s = require(a, "series"); s != FPG_OK) return s;
  if (auto s = require(rational, "rational"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded([&] {
    return out_series(scale(a->value, fpg::rational_from_string(rational)),
                      out);
  });
}

fpg_status fpg_series_truncate(const fpg_series* a, int degree,
                               fpg_series** out) {
  if (auto s = require(a, "series"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded([&] { return out_series(a->value.truncated_to(degree), out); });
}

fpg_status fpg_series_coefficient(const fpg_series* a, const char* word,
                                  char** rational_out) {
  if (auto s = require(a, "series"); s != FPG_OK) return s;
  if (auto s = require(word, "word"); s != FPG_OK) return s;
  if (auto s = require(rational_out, "output"); s != FPG_OK) return s;
  return guarded([&] {
    fpg::Rational r = a->value.at(fpg::Word::from_string(word));
    return out_string(fpg::rational_to_string(r), rational_out);
  });
}

fpg_status fpg_compose(const fpg_series* c, const fpg_series* d,
                       fpg_series** out) {
  return binary_series(c, d, out,
                       [](const auto& x, const auto& y) { return compose(x, y); });
}

fpg_status fpg_mixed_compose(const fpg_series* c, const fpg_series2* d,
                             fpg_series** out) {
  if (auto s = require(c, "series"); s != FPG_OK) return s;
  if (auto s = require(d, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series(mixed_compose(c->value, d->value), out); });
}

fpg_status fpg_triangle(const fpg_series2* c, const fpg_series2* d,
                        fpg_series2** out) {
  if (auto s = require(c, "series2"); s != FPG_OK) return s;
  if (auto s = require(d, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series2(triangle(c->value, d->value), out); });
}

fpg_status fpg_dot_mul(const fpg_series2* c, const fpg_series2* d,
                       fpg_series2** out) {
  return binary_group(c, d, out,
                      [](const auto& x, const auto& y) { return dot_mul(x, y); });
}

fpg_status fpg_dot_inv(const fpg_series2* c, fpg_series2** out) {
  if (auto s = require(c, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series2(dot_inv(as_group(c)).value(), out); });
}

fpg_status fpg_star_mul(const fpg_series2* c, const fpg_series2* d,
                        fpg_series2** out) {
  return binary_group(c, d, out,
                      [](const auto& x, const auto& y) { return star_mul(x, y); });
}

fpg_status fpg_star_inv(const fpg_series2* c, fpg_series2** out) {
  if (auto s = require(c, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series2(star_inv(as_group(c)).value(), out); });
}

fpg_status fpg_r_tri_solve(const fpg_series2* y, const fpg_series2* d,
                           fpg_series2** out) {
  return binary_group(y, d, out, [](const auto& a, const auto& b) {
    return r_tri_solve(a, b);
  });
}

fpg_status fpg_opposite_act(const fpg_series2* a, const fpg_series2* b,
                            fpg_series2** out) {
  return binary_group(a, b, out, [](const auto& x, const auto& y) {
    return opposite_act(x, y);
  });
}

fpg_status fpg_pi1(const fpg_series2* c, fpg_series** out) {
  if (auto s = require(c, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded([&] { return out_series(pi1(as_group(c)), out); });
}

fpg_status fpg_embed(const fpg_series* c, fpg_series2** out) {
  if (auto s = require(c, "series"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded([&] { return out_series2(embed(c->value).value(), out); });
}

fpg_status fpg_lie_bracket(const fpg_series2* u, const fpg_series2* v,
                           fpg_series2** out) {
  return binary_lie(u, v, out, [](const auto& x, const auto& y) {
    return lie_bracket(x, y);
  });
}

fpg_status fpg_post_lie_act(const fpg_series2* u, const fpg_series2* v,
                            fpg_series2** out) {
  return binary_lie(u, v, out, [](const auto& x, const auto& y) {
    return post_lie_act(x, y);
  });
}

fpg_status fpg_derived_bracket(const fpg_series2* u, const fpg_series2* v,
                               fpg_series2** out) {
  return binary_lie(u, v, out, [](const auto& x, const auto& y) {
    return derived_bracket(x, y);
  });
}

fpg_status fpg_lie_bullet(const fpg_series2* u, const fpg_series2* v,
                          fpg_series2** out) {
  return binary_lie(u, v, out,
                    [](const auto& x, const auto& y) { return bullet(x, y); });
}

fpg_status fpg_linearize_action(const fpg_series2* u, const fpg_series2* v,
                                fpg_series2** out) {
  return binary_lie(u, v, out, [](const auto& x, const auto& y) {
    return linearize_action(x, y);
  });
}

fpg_status fpg_hopf_delta(const char* generator, int max_degree,
                          char** json_out) {
  return hopf_map(generator, max_degree, json_out,
                  [](const fpg::HopfAlgebra& algebra, const fpg::Generator& g) {
                    return fpg::tensor_to_json(algebra.delta(g));
                  });
}

fpg_status fpg_hopf_rho(const char* generator, int max_degree,
                        char** json_out) {
  return hopf_map(generator, max_degree, json_out,
                  [](const fpg::HopfAlgebra& algebra, const fpg::Generator& g) {
                    return fpg::tensor_to_json(algebra.rho(g));
                  });
}

fpg_status fpg_hopf_coproduct(const char* generator, int max_degree,
                              char** json_out) {
  return hopf_map(generator, max_degree, json_out,
                  [](const fpg::HopfAlgebra& algebra, const fpg::Generator& g) {
                    return fpg::tensor_to_json(algebra.coproduct(g));
                  });
}

fpg_status fpg_hopf_antipode(const char* generator, int max_degree,
                             char** json_out) {
  return hopf_map(generator, max_degree, json_out,
                  [](const fpg::HopfAlgebra& algebra, const fpg::Generator& g) {
                    return fpg::helement_to_json(algebra.antipode(g));
                  });
}

fpg_status fpg_hopf_evaluate(const char* generator, const fpg_series2* c,
                             char** rational_out) {
  if (auto s = require(generator, "generator"); s != FPG_OK) return s;
  if (auto s = require(c, "series2"); s != FPG_OK) return s;
  if (auto s = require(rational_out, "output"); s != FPG_OK) return s;
  return guarded([&] {
    fpg::Generator g = fpg::Generator::from_string(generator);
    fpg::HopfAlgebra algebra(std::max(g.degree(), 1));
    fpg::Rational r = algebra.evaluate_generator(g, as_group(c));
    return out_string(fpg::rational_to_string(r), rational_out);
  });
}

fpg_status fpg_hopf_table(int max_degree, char** json_out) {
  if (auto s = require(json_out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_string(fpg::hopf_table_json(max_degree).dump(), json_out); });
}

fpg_status fpg_evaluate_cf(const fpg_series* c, const char* signal_json,
                           char** trajectory_json) {
  if (auto s = require(c, "series"); s != FPG_OK) return s;
  if (auto s = require(signal_json, "signal"); s != FPG_OK) return s;
  if (auto s = require(trajectory_json, "output"); s != FPG_OK) return s;
  return guarded([&] {
    fpg::Signal u = fpg::signal_from_json_text(signal_json);
    fpg::Trajectory y = fpg::evaluate_cf(c->value, u);
    return out_string(fpg::trajectory_to_json(y).dump(), trajectory_json);
  });
}

fpg_status fpg_evaluate_ff(const fpg_series2* c, const char* signal_json,
                           char** trajectory_json) {
  if (auto s = require(c, "series2"); s != FPG_OK) return s;
  if (auto s = require(signal_json, "signal"); s != FPG_OK) return s;
  if (auto s = require(trajectory_json, "output"); s != FPG_OK) return s;
  return guarded([&] {
    fpg::Signal u = fpg::signal_from_json_text(signal_json);
    fpg::Trajectory y = fpg::evaluate_ff(c->value, u);
    return out_string(fpg::trajectory_to_json(y).dump(), trajectory_json);
  });
}

fpg_status fpg_feedback_sim(const fpg_series* c, const fpg_series2* d,
                            const char* signal_json, double picard_tol,
                            int max_iter, char** trajectory_json) {
  if (auto s = require(c, "series"); s != FPG_OK) return s;
  if (auto s = require(d, "series2"); s != FPG_OK) return s;
  if (auto s = require(signal_json, "signal"); s != FPG_OK) return s;
  if (auto s = require(trajectory_json, "output"); s != FPG_OK) return s;
  return guarded([&] {
    fpg::Signal u = fpg::signal_from_json_text(signal_json);
    fpg::Trajectory y =
        fpg::feedback_sim(c->value, d->value, u, picard_tol, max_iter);
    return out_string(fpg::trajectory_to_json(y).dump(), trajectory_json);
  });
}

fpg_status fpg_closed_loop_series(const fpg_series* c, const fpg_series2* d,
                                  fpg_series** out) {
  if (auto s = require(c, "series"); s != FPG_OK) return s;
  if (auto s = require(d, "series2"); s != FPG_OK) return s;
  if (auto s = require(out, "output"); s != FPG_OK) return s;
  return guarded(
      [&] { return out_series(closed_loop_series(c->value, d->value), out); });
}

fpg_status fpg_run_suite(const char* suite, int max_degree, int cases,
                         unsigned long long seed, char** report_json) {
  if (auto s = require(suite, "suite"); s != FPG_OK) return s;
  if (auto s = require(report_json, "output"); s != FPG_OK) return s;
  return guarded([&]() -> fpg_status {
    fpg::verify::SuiteSpec spec;
    spec.suite = suite;
    spec.max_degree = max_degree;
    spec.cases = cases;
    spec.seed = seed;
    fpg::verify::Report report = fpg::verify::run_suite(spec);
    fpg_status status =
        report.failures.empty() ? FPG_OK : FPG_VERIFY_FAILED;
    if (status == FPG_VERIFY_FAILED)
      set_error("suite '" + spec.suite + "' reported " +
                std::to_string(report.failures.size()) + " failure(s)");
    fpg_status emit =
        out_string(fpg::verify::report_to_json(report).dump(), report_json);
    return emit == FPG_OK ? status : emit;
  });
}

fpg_status fpg_suite_names(char** json_out) {
  if (auto s = require(json_out, "output"); s != FPG_OK) return s;
  return guarded([&] {
    nlohmann::json names = fpg::verify::suite_names();
    return out_string(names.dump(), json_out);
  });
}

}  // extern "C"
