#include "scc/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "scc/concave.hpp"

namespace scc {

LogScaled LogScaled::from_log(double log_value) {
  if (!std::isfinite(log_value)) throw std::domain_error("LogScaled: log value must be finite");
  LogScaled v;
  v.log_value_ = log_value;
  v.zero_ = false;
  return v;
}

LogScaled LogScaled::from_double(double v) {
  if (!(v >= 0) || !std::isfinite(v)) throw std::domain_error("LogScaled: value must be finite and >= 0");
  return v == 0 ? zero() : from_log(std::log(v));
}

LogScaled LogScaled::from_mpz(const mpz_class& v) {
  if (sgn(v) < 0) throw std::domain_error("LogScaled: negative integer");
  if (sgn(v) == 0) return zero();
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return from_log(std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2);
}

double LogScaled::log() const {
  return zero_ ? -std::numeric_limits<double>::infinity() : log_value_;
}

double LogScaled::to_double() const { return zero_ ? 0.0 : std::exp(log_value_); }

LogScaled operator*(const LogScaled& a, const LogScaled& b) {
  if (a.zero_ || b.zero_) return LogScaled::zero();
  return LogScaled::from_log(a.log_value_ + b.log_value_);
}

LogScaled operator/(const LogScaled& a, const LogScaled& b) {
  if (b.zero_) throw std::domain_error("LogScaled: division by zero");
  if (a.zero_) return LogScaled::zero();
  return LogScaled::from_log(a.log_value_ - b.log_value_);
}

double relative_error(const LogScaled& a, const LogScaled& b) {
  if (b.is_zero()) throw std::domain_error("relative_error: zero reference");
  if (a.is_zero()) return 1.0;
  return std::abs(std::expm1(a.log() - b.log()));
}

double profile_F(double alpha) {
  if (!(alpha >= 0)) throw std::domain_error("profile_F: alpha must be nonnegative");
  const double e1 = std::exp(-alpha);
  return (1.0 + e1) / (1.0 + e1 + e1 * e1);
}

LogScaled theorem1_estimate(std::int64_t ell, std::int64_t N, const mpz_class& p_of_N) {
  if (N < 1) throw std::domain_error("theorem1_estimate: N must be positive");
  const double a = static_cast<double>(ell < 0 ? -ell : ell);
  const double alpha = std::numbers::pi * a / std::sqrt(6.0 * static_cast<double>(N));
  return LogScaled::from_mpz(p_of_N) * LogScaled::from_double(profile_F(alpha));
}

LogScaled vd_leading(std::int64_t N) {
  if (N < 1) throw std::domain_error("vd_leading: N must be positive");
  const double n = static_cast<double>(N);
  const double log_const = -0.25 * std::log(2.0) - 1.25 * std::log(3.0);
  return LogScaled::from_log(log_const - 0.75 * std::log(n) +
                             2.0 * std::numbers::pi * std::sqrt(n / 6.0));
}

double gaussian_ratio(std::int64_t m, std::int64_t N) {
  if (N < 1) throw std::domain_error("gaussian_ratio: N must be positive");
  const double s = 24.0 * static_cast<double>(N);
  const double mm = static_cast<double>(m);
  return std::pow(s, -0.25) * std::exp(-std::numbers::pi * mm * mm / std::sqrt(s));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double DistributionCurve::sup_distance() const {
  double sup = 0;
  for (const auto& pt : points) sup = std::max(sup, std::abs(pt.empirical - pt.gaussian));
  return sup;
}

DistributionCurve empirical_rank_cdf(std::int64_t N, std::span<const double> xs,
                                     PartitionCache& cache) {
  if (N < 1 || N > kExactBudget) {
    throw std::out_of_range("empirical_rank_cdf: N must lie in [1, " +
                            std::to_string(kExactBudget) + "]");
  }
  cache.ensure(N);
  const std::int64_t top = max_rank(N);
  // cumulative[i] = sum_{m <= i - top} V_d(m, N)
  std::vector<mpz_class> per_rank(top + 1);
  for (std::int64_t m = 0; m <= top; ++m) per_rank[m] = rank_count(m, N, cache);
  std::vector<mpz_class> cumulative(2 * top + 1);
  mpz_class running;
  for (std::int64_t m = -top; m <= top; ++m) {
    running += per_rank[m < 0 ? -m : m];
    cumulative[m + top] = running;
  }
  const mpz_class& total = running;

  const double scale = std::pow(6.0 * static_cast<double>(N) / (std::numbers::pi * std::numbers::pi), 0.25);
  DistributionCurve curve;
  curve.N = N;
  curve.points.reserve(xs.size());
  for (double x : xs) {
    const double threshold = std::floor(scale * x);
    double empirical = 0;
    if (threshold >= static_cast<double>(top)) {
      empirical = 1.0;
    } else if (threshold >= static_cast<double>(-top)) {
      const auto idx = static_cast<std::int64_t>(threshold) + top;
      empirical = mpq_class(cumulative[idx], total).get_d();
    }
    curve.points.push_back({x, empirical, normal_cdf(x)});
  }
  return curve;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0) || !(hi >= lo)) throw std::invalid_argument("uniform_grid: need step > 0 and hi >= lo");
  const auto count = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(count + 1);
  for (std::int64_t i = 0; i <= count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

double lemma4_f(double alpha, std::int64_t ell) {
  if (!(alpha > 0)) throw std::domain_error("lemma4_f: alpha must be positive");
  if (ell < 0) throw std::domain_error("lemma4_f: ell must be nonnegative");
  const double l = static_cast<double>(ell);
  double total = 0;
  for (std::int64_t n = 0;; ++n) {
    const double k = static_cast<double>(n);
    const double term = (4.0 * k + l) * std::exp(-2.0 * alpha * k * k - alpha * k * l);
    if (total > 0 && term < 1e-18 * total) break;
    total += term;
  }
  return alpha * total;
}

Theorem1Error theorem1_error(std::int64_t ell, std::int64_t N, PartitionCache& cache) {
  const auto exact = LogScaled::from_mpz(vdm_prop1(ell, N, cache));
  const auto estimate = theorem1_estimate(ell, N, cache(N));
  return {N, ell, exact.log(), estimate.log(), relative_error(exact, estimate)};
}

}  // namespace scc
