#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

namespace riskineq {

/// Seeded random source with the samplers the package needs. All draws are
/// produced by explicit algorithms on top of mt19937_64, so a seed determines
/// the output stream independent of the standard library's distribution
/// implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0,1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0,1).
  double uniform_open() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    return u;
  }

  std::size_t uniform_index(std::size_t n) {
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  /// Standard normal via Marsaglia polar.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Exponential with rate 1.
  double exponential() { return -std::log(uniform_open()); }

  /// Gamma(shape, rate) via Marsaglia-Tsang, with the boost for shape < 1.
  double gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0))
      throw std::invalid_argument("gamma: shape and rate must be positive");
    if (shape < 1.0) {
      const double u = uniform_open();
      return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
        return d * v / rate;
    }
  }

  double chi_squared(double df) { return gamma(0.5 * df, 0.5); }

  double beta(double a, double b) {
    for (;;) {
      const double x = gamma(a, 1.0);
      const double y = gamma(b, 1.0);
      const double r = x / (x + y);
      if (r > 0.0 && r < 1.0) return r;
    }
  }

  /// Inverse Gamma(shape, rate): density proportional to
  /// x^{-shape-1} exp(-rate/x).
  double inverse_gamma(double shape, double rate) {
    return 1.0 / gamma(shape, rate);
  }

  /// Bernoulli(p).
  int bernoulli(double p) { return uniform() < p ? 1 : 0; }

  /// PG(1, z) via the Devroye-type alternating-series sampler
  /// (Polson, Scott & Windle 2013).
  double polya_gamma(double z) {
    if (!std::isfinite(z))
      throw std::invalid_argument("polya_gamma: non-finite tilt");
    const double zz = 0.5 * std::fabs(z);
    const double fz = 0.125 * pi_sq + 0.5 * zz * zz;
    const double p_right = mass_texpon(zz);
    for (;;) {
      double x;
      if (uniform() < p_right) {
        x = pg_trunc + exponential() / fz;
      } else {
        x = truncated_inv_gauss(zz);
      }
      double s = pg_coef(0, x);
      const double y = uniform() * s;
      int n = 0;
      bool accepted = false;
      for (;;) {
        ++n;
        if (n % 2 == 1) {
          s -= pg_coef(n, x);
          if (y <= s) {
            accepted = true;
            break;
          }
        } else {
          s += pg_coef(n, x);
          if (y > s) break;
        }
      }
      if (accepted) return 0.25 * x;
    }
  }

  Eigen::Vector2d mvn2(const Eigen::Vector2d& mean, const Eigen::Matrix2d& cov) {
    Eigen::LLT<Eigen::Matrix2d> llt(cov);
    if (llt.info() != Eigen::Success)
      throw std::runtime_error("mvn2: covariance is not positive definite");
    Eigen::Vector2d zvec(normal(), normal());
    return mean + Eigen::Matrix2d(llt.matrixL()) * zvec;
  }

  /// Wishart(scale, df) for 2x2 matrices via Bartlett decomposition.
  Eigen::Matrix2d wishart2(const Eigen::Matrix2d& scale, double df) {
    Eigen::LLT<Eigen::Matrix2d> llt(scale);
    if (llt.info() != Eigen::Success)
      throw std::runtime_error("wishart2: scale is not positive definite");
    Eigen::Matrix2d a = Eigen::Matrix2d::Zero();
    a(0, 0) = std::sqrt(chi_squared(df));
    a(1, 1) = std::sqrt(chi_squared(df - 1.0));
    a(1, 0) = normal();
    const Eigen::Matrix2d la = Eigen::Matrix2d(llt.matrixL()) * a;
    return la * la.transpose();
  }

  Eigen::Matrix2d inverse_wishart2(const Eigen::Matrix2d& scale, double df) {
    return wishart2(scale.inverse(), df).inverse();
  }

private:
  static constexpr double pg_trunc = 0.64;
  static constexpr double pi_sq = std::numbers::pi * std::numbers::pi;

  static double pnorm_log(double x) {
    return std::log(0.5 * std::erfc(-x / std::numbers::sqrt2));
  }

  // Probability that the proposal comes from the truncated-exponential right
  // piece rather than the truncated inverse-Gaussian left piece.
  static double mass_texpon(double zz) {
    const double t = pg_trunc;
    const double fz = 0.125 * pi_sq + 0.5 * zz * zz;
    const double b = std::sqrt(1.0 / t) * (t * zz - 1.0);
    const double a = -std::sqrt(1.0 / t) * (t * zz + 1.0);
    const double x0 = std::log(fz) + fz * t;
    const double xb = x0 - zz + pnorm_log(b);
    const double xa = x0 + zz + pnorm_log(a);
    const double qdivp = 4.0 / std::numbers::pi * (std::exp(xb) + std::exp(xa));
    return 1.0 / (1.0 + qdivp);
  }

  static double pg_coef(int n, double x) {
    const double np = (n + 0.5) * std::numbers::pi;
    if (x > pg_trunc) {
      return np * std::exp(-0.5 * np * np * x);
    }
    const double k = 2.0 / std::numbers::pi / x;
    return np * k * std::sqrt(k) * std::exp(-2.0 * (n + 0.5) * (n + 0.5) / x);
  }

  // Inverse Gaussian(1/zz, 1) truncated to (0, pg_trunc).
  double truncated_inv_gauss(double zz) {
    const double t = pg_trunc;
    double x = t + 1.0;
    if (zz < 1.0 / t) {
      // mu > t: rejection from a truncated inverse chi-squared envelope.
      for (;;) {
        double e1, e2;
        do {
          e1 = exponential();
          e2 = exponential();
        } while (e1 * e1 > 2.0 * e2 / t);
        x = t / ((1.0 + t * e1) * (1.0 + t * e1));
        const double alpha = std::exp(-0.5 * zz * zz * x);
        if (uniform() <= alpha) return x;
      }
    }
    const double mu = 1.0 / zz;
    while (x > t) {
      double candidate;
      do {
        const double y = normal();
        const double muy = mu * y * y;
        candidate =
            mu + 0.5 * mu * muy - 0.5 * mu * std::sqrt(4.0 * muy + muy * muy);
      } while (candidate <= 0.0);
      x = candidate;
      if (uniform() > mu / (mu + x)) x = mu * mu / x;
    }
    return x;
  }

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace riskineq
