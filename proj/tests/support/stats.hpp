// Test-only statistics: adaptive quadrature of densities, the two-sided
// Kolmogorov-Smirnov statistic and its asymptotic p-value.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace vlcopt::testing {

inline double integrate(const std::function<double(double)>& f, double a,
                        double b) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-13);
}

// Integral of f over [0, inf).
inline double integrate_half_line(const std::function<double(double)>& f) {
  return integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

// D_n = sup |F_n - F| where `cdf_sorted` holds F at the sorted samples.
inline double ks_statistic(const std::vector<double>& cdf_sorted) {
  const double n = static_cast<double>(cdf_sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < cdf_sorted.size(); ++i) {
    const double f = cdf_sorted[i];
    const double idx = static_cast<double>(i);
    d = std::max({d, (idx + 1.0) / n - f, f - idx / n});
  }
  return d;
}

// P(D_n > d) via the Kolmogorov series with Stephens' small-sample
// correction.
inline double ks_p_value(double d, std::size_t n_samples) {
  const double sn = std::sqrt(static_cast<double>(n_samples));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

// CDF of `pdf` at each sorted sample, by accumulating quadrature over the
// gaps between consecutive samples. The gaps are short, so a single
// 61-point Kronrod rule per gap is exact to rounding for a smooth density.
inline std::vector<double> cdf_by_quadrature(
    const std::function<double(double)>& pdf, std::vector<double> sorted) {
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(sorted.size());
  double acc = 0.0;
  double prev = 0.0;
  for (double x : sorted) {
    if (x > prev) {
      acc += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          pdf, prev, x, 0);
    }
    prev = x;
    out.push_back(acc);
  }
  return out;
}

}  // namespace vlcopt::testing
