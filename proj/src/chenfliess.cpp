#include "chenfliess.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

#include "compose.hpp"
#include "errors.hpp"

namespace fpg {

void Signal::validate() const {
  if (!(step > 0) || !std::isfinite(step))
    throw UsageError("signal step must be positive and finite");
  if (values.empty()) throw UsageError("signal needs at least one step");
  for (double v : values)
    if (!std::isfinite(v)) throw UsageError("signal value is not finite");
}

IteratedIntegralTable::IteratedIntegralTable(const Signal& u, int degree)
    : IteratedIntegralTable(u, degree, Word::all_up_to_wdeg(degree)) {}

IteratedIntegralTable::IteratedIntegralTable(const Signal& u, int degree,
                                             const std::vector<Word>& support)
    : degree_(degree), step_(u.step) {
  u.validate();
  std::set<Word> closed;
  closed.insert(Word());
  for (const Word& w : support) {
    if (w.wdeg() > degree)
      throw UsageError("word '" + w.to_string() + "' beyond table degree");
    for (std::size_t n = 0; n <= w.size(); ++n) closed.insert(w.suffix(n));
  }
  words_.assign(closed.begin(), closed.end());
  for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;

  // Per word, the Chen splitting w = prefix.suffix: the prefix is the block
  // of outermost integrations falling inside the new step, contributing
  // u_k^{#x1(prefix)} * h^{|prefix|} / |prefix|! in closed form.
  struct Part {
    std::size_t suffix;
    int x1_count;
    double h_weight;  // h^{len}/len!
  };
  std::vector<std::vector<Part>> parts(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    double h_weight = 1.0;
    int x1s = 0;
    for (std::size_t len = 0; len <= w.size(); ++len) {
      if (len > 0) {
        h_weight *= step_ / static_cast<double>(len);
        if (w.at(len - 1) == Letter::x1) ++x1s;
      }
      parts[i].push_back(Part{index_.at(w.suffix(len)), x1s, h_weight});
    }
  }

  rows_.reserve(u.steps() + 1);
  std::vector<double> row(words_.size(), 0.0);
  row[index_.at(Word())] = 1.0;  // F_empty == 1, all others start at 0
  rows_.push_back(row);
  std::vector<double> u_powers(33, 1.0);
  for (std::size_t k = 0; k < u.steps(); ++k) {
    const double uk = u.values[k];
    for (std::size_t p = 1; p < u_powers.size(); ++p)
      u_powers[p] = u_powers[p - 1] * uk;
    const std::vector<double>& prev = rows_.back();
    std::vector<double> next(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      double acc = 0.0;
      for (const Part& part : parts[i])
        acc += u_powers[static_cast<std::size_t>(part.x1_count)] *
               part.h_weight * prev[part.suffix];
      next[i] = acc;
    }
    rows_.push_back(std::move(next));
  }
}

double IteratedIntegralTable::grid_time(std::size_t k) const {
  return step_ * static_cast<double>(k);
}

double IteratedIntegralTable::value(std::size_t k, const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw UsageError("word '" + w.to_string() + "' beyond table degree");
  return rows_.at(k)[it->second];
}

Trajectory evaluate_cf(const Series& c, const IteratedIntegralTable& table) {
  if (table.degree() < c.max_degree())
    throw UsageError("table degree below series degree");
  Trajectory out;
  out.t.reserve(table.grid_points());
  out.y.reserve(table.grid_points());
  for (std::size_t k = 0; k < table.grid_points(); ++k) {
    double y = 0.0;
    for (const auto& [w, r] : c.terms()) y += r.get_d() * table.value(k, w);
    out.t.push_back(table.grid_time(k));
    out.y.push_back(y);
  }
  return out;
}

Trajectory evaluate_cf(const Series& c, const Signal& u) {
  std::vector<Word> support;
  support.reserve(c.terms().size());
  for (const auto& [w, r] : c.terms()) support.push_back(w);
  IteratedIntegralTable table(u, c.max_degree(), support);
  return evaluate_cf(c, table);
}

namespace {
std::vector<Word> channel_support(const Series2& c) {
  std::vector<Word> support;
  for (const auto& [w, r] : c.c1().terms()) support.push_back(w);
  for (const auto& [w, r] : c.c2().terms()) support.push_back(w);
  return support;
}
}  // namespace

Trajectory evaluate_ff(const Series2& c, const Signal& u) {
  IteratedIntegralTable table(u, c.max_degree(), channel_support(c));
  Trajectory top = evaluate_cf(c.c1(), table);
  Trajectory bottom = evaluate_cf(c.c2().extended_to(c.max_degree()), table);
  Trajectory out;
  out.t = top.t;
  out.y.resize(top.y.size());
  const std::size_t n = u.steps();
  for (std::size_t k = 0; k <= n; ++k) {
    const double uk = u.values[k < n ? k : n - 1];  // left value, u_N := u_{N-1}
    out.y[k] = uk * top.y[k] + bottom.y[k];
  }
  return out;
}

Signal resample(const Trajectory& y, double step) {
  Signal s;
  s.step = step;
  s.values.reserve(y.y.size() - 1);
  for (std::size_t k = 0; k + 1 < y.y.size(); ++k)
    s.values.push_back(0.5 * (y.y[k] + y.y[k + 1]));
  return s;
}

Trajectory feedback_sim(const Series& c, const Series2& d, const Signal& u,
                        double tol, int max_iter,
                        std::vector<double>* sup_changes) {
  u.validate();
  if (!(tol > 0)) throw UsageError("picard tolerance must be positive");
  if (max_iter < 1) throw UsageError("max_iter must be >= 1");

  Trajectory y = evaluate_cf(c, u);
  double residual = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Loop input u*F_{d1}[y] + F_{d2}[y]: the feedback channels are smooth,
    // so each is reduced to its midpoint value per step; u itself is already
    // piecewise constant.
    Signal fed = resample(y, u.step);
    IteratedIntegralTable table(fed, d.max_degree(), channel_support(d));
    Trajectory v1 = evaluate_cf(d.c1(), table);
    Trajectory v2 = evaluate_cf(d.c2().extended_to(d.max_degree()), table);
    Signal loop_input;
    loop_input.step = u.step;
    loop_input.values.resize(u.steps());
    for (std::size_t k = 0; k < u.steps(); ++k) {
      const double v1_mid = 0.5 * (v1.y[k] + v1.y[k + 1]);
      const double v2_mid = 0.5 * (v2.y[k] + v2.y[k + 1]);
      loop_input.values[k] = u.values[k] * v1_mid + v2_mid;
    }
    Trajectory next = evaluate_cf(c, loop_input);
    residual = 0.0;
    for (std::size_t k = 0; k < next.y.size(); ++k)
      residual = std::max(residual, std::abs(next.y[k] - y.y[k]));
    if (sup_changes) sup_changes->push_back(residual);
    y = std::move(next);
    if (residual <= tol) return y;
  }
  throw ConvergenceError("feedback simulation did not converge", residual);
}

Series closed_loop_series(const Series& c, const Series2& d) {
  if (c.max_degree() != d.max_degree())
    throw UsageError("mixed truncation degrees between plant and feedback");
  if (d.c1().at(Word()) != 1)
    throw UsageError("closed loop needs unit constant term in the feedback "
                     "multiplicative channel");
  const int degree = c.max_degree();
  Series hat = c;
  for (int pass = 0; pass <= degree + 1; ++pass) {
    Series top = compose(d.c1(), hat);
    Series bottom =
        compose(d.c2().extended_to(degree), hat).truncated_to(degree - 1);
    Series next = mixed_compose(c, Series2(std::move(top), std::move(bottom)));
    if (next == hat) return hat;
    hat = std::move(next);
  }
  throw InternalError("closed-loop fixed point did not stabilize in D+2 passes");
}

}  // namespace fpg
