#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "riskineq/rng.hpp"
#include "riskineq/stats.hpp"

namespace riskineq {

/// A weighted sample of probabilities in (0,1) representing one population's
/// mortality-risk distribution. Weights are normalized to sum to 1 on
/// construction; uniform when omitted.
class RiskDistribution {
public:
  explicit RiskDistribution(std::vector<double> values,
                            std::vector<double> weights = {})
      : values_(std::move(values)), weights_(std::move(weights)) {
    if (values_.empty())
      throw ValidationError("RiskDistribution: empty sample");
    for (const double v : values_) {
      if (!(v > 0.0) || !(v < 1.0))
        throw ValidationError("RiskDistribution: value outside (0,1): " +
                              std::to_string(v));
    }
    if (weights_.empty()) {
      weights_.assign(values_.size(), 1.0 / static_cast<double>(values_.size()));
    } else {
      if (weights_.size() != values_.size())
        throw ValidationError("RiskDistribution: weight/value size mismatch");
      double total = 0.0;
      for (const double w : weights_) {
        if (w < 0.0) throw ValidationError("RiskDistribution: negative weight");
        total += w;
      }
      if (!(total > 0.0))
        throw ValidationError("RiskDistribution: weights sum to zero");
      for (double& w : weights_) w /= total;
    }
  }

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return values_.size(); }

  double mean() const { return weighted_mean(values_, weights_); }
  double sd() const { return std::sqrt(weighted_variance(values_, weights_)); }

  /// Survival-side distribution, values 1 - pi.
  RiskDistribution complement() const {
    std::vector<double> c(values_.size());
    std::transform(values_.begin(), values_.end(), c.begin(),
                   [](double v) { return 1.0 - v; });
    return RiskDistribution(std::move(c), weights_);
  }

  /// Same sample scaled by b in (0,1]; stays inside (0,1).
  RiskDistribution scaled(double b) const {
    std::vector<double> s(values_.size());
    std::transform(values_.begin(), values_.end(), s.begin(),
                   [b](double v) { return b * v; });
    return RiskDistribution(std::move(s), weights_);
  }

private:
  std::vector<double> values_;
  std::vector<double> weights_;
};

/// Weighted mean of f(pi_i / mu): the common form shared by the ratio-based
/// income-inequality measures.
inline double common_form(const RiskDistribution& dist,
                          const std::function<double(double)>& f) {
  const double mu = dist.mean();
  if (!(mu > 0.0)) throw ValidationError("common_form: zero mean");
  double s = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i)
    s += dist.weights()[i] * f(dist.values()[i] / mu);
  return s;
}

/// Squared coefficient of variation: mean (r - 1)^2.
inline double cv2(const RiskDistribution& dist) {
  return common_form(dist, [](double r) { return (r - 1.0) * (r - 1.0); });
}

/// Theil index: mean r log r.
inline double theil(const RiskDistribution& dist) {
  return common_form(dist, [](double r) { return r <= 0.0 ? 0.0 : r * std::log(r); });
}

/// Variance of log r.
inline double var_logs(const RiskDistribution& dist) {
  const double mu = dist.mean();
  if (!(mu > 0.0)) throw ValidationError("var_logs: zero mean");
  std::vector<double> logs(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double v = dist.values()[i];
    if (!(v > 0.0)) throw ValidationError("var_logs: nonpositive value");
    logs[i] = std::log(v / mu);
  }
  return weighted_variance(logs, dist.weights());
}

/// Gini index (1/2) sum_i sum_j w_i w_j |r_i - r_j| via the sorted
/// prefix-sum identity; O(n log n).
inline double gini(const RiskDistribution& dist) {
  const double mu = dist.mean();
  if (!(mu > 0.0)) throw ValidationError("gini: zero mean");
  const auto& x = dist.values();
  const auto& w = dist.weights();
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  // sum_{i<j} w_i w_j (x_j - x_i) over the sorted sample.
  double cum_w = 0.0, cum_wx = 0.0, total = 0.0;
  for (const std::size_t idx : order) {
    total += w[idx] * (x[idx] * cum_w - cum_wx);
    cum_w += w[idx];
    cum_wx += w[idx] * x[idx];
  }
  return total / mu;
}

enum class Measure { mean, sd, cv2, theil, var_logs, gini };

inline const char* measure_name(Measure m) {
  switch (m) {
    case Measure::mean: return "mean";
    case Measure::sd: return "sd";
    case Measure::cv2: return "cv2";
    case Measure::theil: return "theil";
    case Measure::var_logs: return "var_logs";
    case Measure::gini: return "gini";
  }
  return "?";
}

inline double evaluate_measure(const RiskDistribution& dist, Measure m) {
  switch (m) {
    case Measure::mean: return dist.mean();
    case Measure::sd: return dist.sd();
    case Measure::cv2: return cv2(dist);
    case Measure::theil: return theil(dist);
    case Measure::var_logs: return var_logs(dist);
    case Measure::gini: return gini(dist);
  }
  throw ValidationError("evaluate_measure: unknown measure");
}

/// All measures for one distribution.
struct MeasureReport {
  double mean = 0.0;
  double sd = 0.0;
  double cv2 = 0.0;
  double theil = 0.0;
  double var_logs = 0.0;
  double gini = 0.0;

  double cv() const { return std::sqrt(cv2); }

  static MeasureReport of(const RiskDistribution& dist) {
    MeasureReport r;
    r.mean = dist.mean();
    r.sd = dist.sd();
    r.cv2 = riskineq::cv2(dist);
    r.theil = riskineq::theil(dist);
    r.var_logs = riskineq::var_logs(dist);
    r.gini = riskineq::gini(dist);
    return r;
  }
};

/// Result of checking the symmetry property for one measure on a pair of
/// distributions: does the "which is more unequal" ordering survive the
/// mortality -> survival complement?
struct SymmetryAudit {
  Measure measure;
  double value0 = 0.0;       ///< measure on dist0 (mortality side)
  double value1 = 0.0;       ///< measure on dist1
  double value0_comp = 0.0;  ///< measure on 1 - dist0 (survival side)
  double value1_comp = 0.0;  ///< measure on 1 - dist1
  int ordering = 0;          ///< sign(value1 - value0)
  int ordering_comp = 0;     ///< sign(value1_comp - value0_comp)
  bool agree = false;        ///< orderings match
};

inline SymmetryAudit symmetry_audit(const RiskDistribution& dist0,
                                    const RiskDistribution& dist1, Measure m) {
  const auto sign = [](double d) { return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0); };
  SymmetryAudit a;
  a.measure = m;
  a.value0 = evaluate_measure(dist0, m);
  a.value1 = evaluate_measure(dist1, m);
  a.value0_comp = evaluate_measure(dist0.complement(), m);
  a.value1_comp = evaluate_measure(dist1.complement(), m);
  a.ordering = sign(a.value1 - a.value0);
  a.ordering_comp = sign(a.value1_comp - a.value0_comp);
  a.agree = a.ordering == a.ordering_comp;
  return a;
}

/// One row of the beta-distribution measure table: measures on simulated
/// beta(alpha, beta) mortality draws and on their survival complements.
struct BetaTableRow {
  double alpha = 0.0;
  double beta = 0.0;
  double analytic_mean = 0.0;  ///< alpha / (alpha + beta)
  MeasureReport mortality;
  MeasureReport survival;
};

inline std::vector<BetaTableRow> beta_table(const std::vector<double>& alphas,
                                            double beta, std::size_t n_draws,
                                            std::uint64_t seed) {
  if (!(beta > 0.0)) throw ValidationError("beta_table: beta must be positive");
  if (n_draws < 2) throw ValidationError("beta_table: need >= 2 draws");
  std::vector<BetaTableRow> rows;
  rows.reserve(alphas.size());
  Rng rng(seed);
  for (const double alpha : alphas) {
    if (!(alpha > 0.0))
      throw ValidationError("beta_table: alpha must be positive");
    std::vector<double> draws(n_draws);
    for (double& d : draws) d = rng.beta(alpha, beta);
    const RiskDistribution mort(std::move(draws));
    BetaTableRow row;
    row.alpha = alpha;
    row.beta = beta;
    row.analytic_mean = alpha / (alpha + beta);
    row.mortality = MeasureReport::of(mort);
    row.survival = MeasureReport::of(mort.complement());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace riskineq
