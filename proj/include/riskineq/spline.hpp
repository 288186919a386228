#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <span>
#include <vector>

#include "riskineq/stats.hpp"

namespace riskineq {

/// B-spline basis on a bounded interval. Knots are clamped (degree+1 copies
/// at each boundary), so the basis is a partition of unity on
/// [boundary_lo, boundary_hi]. Evaluation outside the boundary clamps to it.
class SplineBasis {
public:
  SplineBasis(int degree, std::vector<double> interior_knots, double boundary_lo,
              double boundary_hi)
      : degree_(degree),
        interior_(std::move(interior_knots)),
        lo_(boundary_lo),
        hi_(boundary_hi) {
    if (degree_ < 1) throw ValidationError("SplineBasis: degree must be >= 1");
    if (!(lo_ < hi_))
      throw ValidationError("SplineBasis: empty boundary interval");
    for (std::size_t i = 0; i < interior_.size(); ++i) {
      if (!(interior_[i] > lo_) || !(interior_[i] < hi_))
        throw ValidationError("SplineBasis: interior knot outside boundary");
      if (i > 0 && !(interior_[i] > interior_[i - 1]))
        throw ValidationError("SplineBasis: interior knots must be strictly increasing");
    }
    const std::size_t p = static_cast<std::size_t>(degree_);
    knots_.assign(p + 1, lo_);
    knots_.insert(knots_.end(), interior_.begin(), interior_.end());
    knots_.insert(knots_.end(), p + 1, hi_);
  }

  int degree() const { return degree_; }
  const std::vector<double>& interior_knots() const { return interior_; }
  double boundary_lo() const { return lo_; }
  double boundary_hi() const { return hi_; }
  std::size_t dim() const {
    return interior_.size() + static_cast<std::size_t>(degree_) + 1;
  }

  /// Basis row at x (clamped to the boundary). Nonnegative, sums to 1.
  std::vector<double> evaluate(double x) const {
    const double xc = std::clamp(x, lo_, hi_);
    std::vector<double> row(dim(), 0.0);
    const std::size_t p = static_cast<std::size_t>(degree_);
    // Knot span containing xc; the right boundary belongs to the last span.
    std::size_t span = p;
    const std::size_t last = knots_.size() - p - 2;
    while (span < last && xc >= knots_[span + 1]) ++span;
    // Cox-de Boor triangle for the p+1 functions alive on this span.
    std::vector<double> nvals(p + 1, 0.0);
    nvals[0] = 1.0;
    std::vector<double> left(p + 1, 0.0), right(p + 1, 0.0);
    for (std::size_t j = 1; j <= p; ++j) {
      left[j] = xc - knots_[span + 1 - j];
      right[j] = knots_[span + j] - xc;
      double saved = 0.0;
      for (std::size_t r = 0; r < j; ++r) {
        const double denom = right[r + 1] + left[j - r];
        const double temp = denom == 0.0 ? 0.0 : nvals[r] / denom;
        nvals[r] = saved + right[r + 1] * temp;
        saved = left[j - r] * temp;
      }
      nvals[j] = saved;
    }
    for (std::size_t r = 0; r <= p; ++r) row[span - p + r] = nvals[r];
    return row;
  }

private:
  int degree_;
  std::vector<double> interior_;
  double lo_, hi_;
  std::vector<double> knots_;  ///< full clamped knot vector
};

struct BasisExpansion {
  SplineBasis basis;
  std::vector<std::vector<double>> columns;  ///< design columns, column-major
};

/// Basis with interior knots at equally spaced quantiles of the observed
/// values, evaluated at those values.
inline BasisExpansion build_basis(std::span<const double> values, int degree,
                                  int n_interior_knots) {
  if (degree < 1) throw ValidationError("build_basis: degree must be >= 1");
  if (n_interior_knots < 0)
    throw ValidationError("build_basis: negative knot count");
  if (values.size() < 2) throw ValidationError("build_basis: need >= 2 values");
  std::set<double> distinct(values.begin(), values.end());
  if (distinct.size() < 2)
    throw ValidationError("build_basis: constant input vector");
  if (distinct.size() < static_cast<std::size_t>(n_interior_knots) + 2)
    throw ValidationError("build_basis: fewer distinct values than knots");

  const double lo = *distinct.begin();
  const double hi = *distinct.rbegin();
  std::vector<double> interior;
  interior.reserve(static_cast<std::size_t>(n_interior_knots));
  for (int k = 1; k <= n_interior_knots; ++k) {
    const double q = static_cast<double>(k) / (n_interior_knots + 1);
    interior.push_back(quantile(values, q));
  }
  for (std::size_t i = 0; i < interior.size(); ++i) {
    if (!(interior[i] > lo) || !(interior[i] < hi) ||
        (i > 0 && !(interior[i] > interior[i - 1])))
      throw ValidationError(
          "build_basis: quantile knots are not strictly increasing inside the "
          "boundary (too few distinct values)");
  }

  SplineBasis basis(degree, std::move(interior), lo, hi);
  std::vector<std::vector<double>> cols(basis.dim(),
                                        std::vector<double>(values.size(), 0.0));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::vector<double> row = basis.evaluate(values[i]);
    for (std::size_t j = 0; j < row.size(); ++j) cols[j][i] = row[j];
  }
  return BasisExpansion{std::move(basis), std::move(cols)};
}

}  // namespace riskineq
