#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "scc/number_theory.hpp"

namespace scc {

/// A nonnegative real stored as its natural logarithm.
class LogScaled {
 public:
  static LogScaled zero() { return LogScaled{}; }
  static LogScaled from_log(double log_value);
  /// Requires v >= 0.
  static LogScaled from_double(double v);
  /// Exact-to-rounding conversion of a nonnegative big integer; values far
  /// beyond binary64 range are fine.
  static LogScaled from_mpz(const mpz_class& v);

  bool is_zero() const { return zero_; }
  /// log of the value; -inf for zero.
  double log() const;
  /// May overflow to +inf.
  double to_double() const;

  friend LogScaled operator*(const LogScaled& a, const LogScaled& b);
  /// Throws std::domain_error on division by zero.
  friend LogScaled operator/(const LogScaled& a, const LogScaled& b);

 private:
  double log_value_ = 0.0;
  bool zero_ = true;
};

/// |a/b - 1| computed from the log difference, safe for huge a and b.
double relative_error(const LogScaled& a, const LogScaled& b);

/// F(alpha) = (1 + e^-alpha) / (1 + e^-alpha + e^-2alpha), alpha >= 0.
double profile_F(double alpha);

/// p(N) F(pi |ell| / sqrt(6N)), the uniform estimate of V_d(ell, N + |ell|(|ell|+1)/2).
LogScaled theorem1_estimate(std::int64_t ell, std::int64_t N, const mpz_class& p_of_N);

/// 2^{-1/4} 3^{-5/4} N^{-3/4} e^{2 pi sqrt(N/6)}.
LogScaled vd_leading(std::int64_t N);

/// (24N)^{-1/4} exp(-pi m^2 / sqrt(24N)), the local Gaussian approximation of
/// V_d(m, N) / V_d(N).
double gaussian_ratio(std::int64_t m, std::int64_t N);

/// Standard normal distribution function.
double normal_cdf(double x);

struct DistributionPoint {
  double x = 0;
  double empirical = 0;
  double gaussian = 0;
};

struct DistributionCurve {
  std::int64_t N = 0;
  std::vector<DistributionPoint> points;

  double sup_distance() const;
};

inline constexpr std::int64_t kExactBudget = 40'000;

/// Exact rank distribution at weight N, scaled by (6N/pi^2)^{1/4}, sampled at
/// each x and paired with normal_cdf(x). Throws std::out_of_range when N is
/// outside [1, kExactBudget].
DistributionCurve empirical_rank_cdf(std::int64_t N, std::span<const double> xs,
                                     PartitionCache& cache);

/// lo, lo + step, ..., up to hi (inclusive within rounding).
std::vector<double> uniform_grid(double lo, double hi, double step);

/// alpha * sum_{n>=0} (4n + ell) e^{-2 alpha n^2 - alpha n ell}.
double lemma4_f(double alpha, std::int64_t ell);

struct Theorem1Error {
  std::int64_t N = 0;
  std::int64_t ell = 0;
  double exact_log = 0;
  double estimate_log = 0;
  double rel_err = 0;
};

/// Compares V_d(ell, N + |ell|(|ell|+1)/2) with theorem1_estimate.
Theorem1Error theorem1_error(std::int64_t ell, std::int64_t N, PartitionCache& cache);

}  // namespace scc
