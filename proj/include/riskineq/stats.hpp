#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riskineq {

/// Error hierarchy: ValidationError for bad inputs/configs (CLI exit 1),
/// plain Error for runtime/sampler failures (CLI exit 2).
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
  using Error::Error;
};

inline double weighted_mean(std::span<const double> values,
                            std::span<const double> weights) {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * values[i];
  return s;
}

/// Population-convention weighted variance (weights sum to 1).
inline double weighted_variance(std::span<const double> values,
                                std::span<const double> weights) {
  const double m = weighted_mean(values, weights);
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - m;
    s += weights[i] * d * d;
  }
  return s;
}

inline double mean(std::span<const double> values) {
  if (values.empty()) throw ValidationError("mean: empty input");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

/// Population-convention variance.
inline double variance(std::span<const double> values) {
  const double m = mean(values);
  double s = 0.0;
  for (const double v : values) s += (v - m) * (v - m);
  return s / static_cast<double>(values.size());
}

/// Weighted quantile with linear interpolation between cumulative-weight
/// midpoints. Order-statistic based, so quantile(b*x) = b*quantile(x) exactly
/// for b > 0.
inline double weighted_quantile(std::span<const double> values,
                                std::span<const double> weights, double q) {
  if (values.empty()) throw ValidationError("weighted_quantile: empty input");
  if (q < 0.0 || q > 1.0)
    throw ValidationError("weighted_quantile: q outside [0,1]");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  double total = 0.0;
  for (const double w : weights) total += w;
  // Midpoint positions of each sorted atom in [0,1].
  double cum = 0.0;
  double prev_pos = -1.0, prev_val = values[order.front()];
  for (const std::size_t idx : order) {
    const double w = weights[idx] / total;
    const double pos = cum + 0.5 * w;
    cum += w;
    if (q <= pos) {
      if (prev_pos < 0.0) return values[idx];
      const double f = (q - prev_pos) / (pos - prev_pos);
      return prev_val + f * (values[idx] - prev_val);
    }
    prev_pos = pos;
    prev_val = values[idx];
  }
  return values[order.back()];
}

inline double quantile(std::span<const double> values, double q) {
  const std::vector<double> w(values.size(), 1.0 / static_cast<double>(values.size()));
  return weighted_quantile(values, w, q);
}

inline double median(std::span<const double> values) {
  return quantile(values, 0.5);
}

struct IntervalSummary {
  double median = 0.0;
  double lo = 0.0;  ///< 2.5th percentile
  double hi = 0.0;  ///< 97.5th percentile
};

inline IntervalSummary summarize_draws(std::span<const double> draws) {
  IntervalSummary s;
  s.median = quantile(draws, 0.5);
  s.lo = quantile(draws, 0.025);
  s.hi = quantile(draws, 0.975);
  return s;
}

/// Trapezoid rule over equally spaced samples.
inline double trapezoid(std::span<const double> heights, double dx) {
  if (heights.size() < 2) throw ValidationError("trapezoid: need >= 2 points");
  double s = 0.5 * (heights.front() + heights.back());
  for (std::size_t i = 1; i + 1 < heights.size(); ++i) s += heights[i];
  return s * dx;
}

inline double logistic(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }

/// log(1 + exp(x)) without overflow.
inline double log1p_exp(double x) {
  if (x > 35.0) return x;
  if (x < -35.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string to_hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace riskineq
