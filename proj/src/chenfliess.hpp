#pragma once

#include <vector>

#include "series2.hpp"

namespace fpg {

/// Piecewise-constant control on a uniform grid: u(t) = values[k] on
/// [k*step, (k+1)*step). Horizon T = values.size() * step.
struct Signal {
  double step = 0;
  std::vector<double> values;

  void validate() const;
  std::size_t steps() const { return values.size(); }
  double horizon() const { return step * static_cast<double>(values.size()); }
};

/// Output samples at the grid points t_0..t_N (one more than the signal has
/// steps).
struct Trajectory {
  std::vector<double> t;
  std::vector<double> y;
};

/// Iterated integrals F_w[u] at every grid point, for all words of
/// wdeg <= degree. Propagation is exact for piecewise-constant inputs: over
/// one step the prefix factor of the Chen splitting integrates in closed
/// form, so the only numerical error anywhere downstream is rounding plus
/// series truncation.
class IteratedIntegralTable {
 public:
  IteratedIntegralTable(const Signal& u, int degree);
  /// Restricted table covering only the given words (closed under suffixes
  /// automatically); much cheaper for sparse series at high degree.
  IteratedIntegralTable(const Signal& u, int degree,
                        const std::vector<Word>& support);

  int degree() const { return degree_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t grid_points() const { return rows_.size(); }
  double grid_time(std::size_t k) const;

  /// F_w[u](t_k); the word must satisfy wdeg <= degree.
  double value(std::size_t k, const Word& w) const;

 private:
  int degree_;
  double step_;
  std::vector<Word> words_;            // canonical order
  std::map<Word, std::size_t> index_;
  std::vector<std::vector<double>> rows_;  // rows_[k][index of word]
};

/// Chen-Fliess evaluation y(t_k) = c(1) + sum c(w) F_w[u](t_k), with the
/// summation in canonical word order so runs are bit-reproducible.
/// Coefficients convert to double at entry. The truncation tail is
/// O(T^{(D+1)/2}) for bounded coefficients and T <= 1.
Trajectory evaluate_cf(const Series& c, const Signal& u);
Trajectory evaluate_cf(const Series& c, const IteratedIntegralTable& table);

/// Feed-forward evaluation u(t_k)*F_{c1}[u](t_k) + F_{c2}[u](t_k); the
/// control is sampled by its left value at grid points, u_N := u_{N-1}.
Trajectory evaluate_ff(const Series2& c, const Signal& u);

/// Resamples a trajectory to a piecewise-constant signal on its own grid,
/// taking the midpoint of the linear interpolant on each step (the O(h^2)
/// convention used whenever a computed output feeds another operator).
Signal resample(const Trajectory& y, double step);

/// Picard simulation of the affine feedback loop
///   y = F_c[u * F_{d1}[y] + F_{d2}[y]],
/// starting from y = F_c[u] and stopping when the sup-norm change is <= tol.
/// Contraction needs a short horizon; T <= 0.5 with unit-bounded data is the
/// documented regime. Throws ConvergenceError after max_iter iterations.
Trajectory feedback_sim(const Series& c, const Series2& d, const Signal& u,
                        double tol, int max_iter,
                        std::vector<double>* sup_changes = nullptr);

/// Exact generating series of the closed loop: the fixed point of
///   chat = c |> [d1 o chat, d2 o chat],
/// well defined when d1 has unit constant term (the fixed point is then
/// unitriangular in wdeg and stabilizes in <= D+1 passes).
Series closed_loop_series(const Series& c, const Series2& d);

}  // namespace fpg
