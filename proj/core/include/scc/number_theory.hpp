#pragma once

#include <cstdint>
#include <deque>
#include <shared_mutex>

#include <gmpxx.h>

namespace scc {

/// Kronecker symbol (a/n) for all integers a, n, including n <= 0.
int kronecker(std::int64_t a, std::int64_t n);

/// (-3 / 2n+1): +1, 0, -1 for n = 0, 1, 2 (mod 3).
int chi_minus3_at_odd(std::int64_t n);

/// (-12 / n) from its residue table mod 12.
int chi_minus12(std::int64_t n);

/// Growable table of exact partition numbers p(0..capacity).
///
/// Values are produced by Euler's pentagonal-number recurrence. Lookups of
/// negative indices return 0. The cache is internally synchronized: growth
/// takes an exclusive lock, lookups a shared one, and references to stored
/// values stay valid for the lifetime of the cache.
class PartitionCache {
 public:
  static constexpr std::int64_t kDefaultLimit = 1'000'000;

  explicit PartitionCache(std::int64_t limit = kDefaultLimit);

  PartitionCache(const PartitionCache&) = delete;
  PartitionCache& operator=(const PartitionCache&) = delete;

  /// p(n), extending the table when needed. Throws std::length_error when n
  /// exceeds the configured limit.
  const mpz_class& operator()(std::int64_t n);

  /// Populate the table through index n.
  void ensure(std::int64_t n);

  /// Largest index filled so far.
  std::int64_t capacity() const;
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t limit_;
  mutable std::shared_mutex mutex_;
  std::deque<mpz_class> values_;
};

/// p(n) through the cache; 0 for negative n.
const mpz_class& partition_count(PartitionCache& cache, std::int64_t n);

inline constexpr std::int64_t kPartitionEnumerateBound = 60;

/// Counts partitions of n by generating each one explicitly.
/// Throws std::out_of_range for n outside [0, kPartitionEnumerateBound].
std::uint64_t partition_enumerate(std::int64_t n);

/// B = 2*pi/sqrt(6), the exponential rate in the Hardy-Ramanujan formula.
double hardy_ramanujan_b();

/// p^(x) = e^{B sqrt x} / (4 sqrt3 x) * (1 - 1/(B sqrt x)).
/// Throws std::domain_error for x <= 1/B^2. Overflows to +inf for large x;
/// use log_hardy_ramanujan_phat there.
double hardy_ramanujan_phat(double x);

/// Natural log of p^(x), finite for every admissible x.
double log_hardy_ramanujan_phat(double x);

/// |p(n) - p^(n - 1/24)| * n * e^{-B sqrt(n) / 2}, evaluated with ~100
/// significant digits so the cancellation between p(n) and p^ is resolved.
double hardy_ramanujan_residual(std::int64_t n, const mpz_class& p_of_n);

/// e^{B r / (2 sqrt X)}, the main factor of p(X + r) / p(X).
double partition_ratio_approx(double X, double r);

}  // namespace scc
