#include "scc/number_theory.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace scc {

namespace {

// Jacobi symbol (a/n) for odd n > 0, with 0 <= a < n.
int jacobi_odd(std::uint64_t a, std::uint64_t n) {
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const auto r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

// Requires 0 < n <= INT64_MAX.
std::uint64_t mod_nonneg(std::int64_t a, std::uint64_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  const auto m = a % nn;
  return static_cast<std::uint64_t>(m < 0 ? m + nn : m);
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

  int result = 1;
  // Magnitude through unsigned arithmetic so INT64_MIN is handled.
  std::uint64_t m = n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
  if (n < 0 && a < 0) result = -1;

  const int twos = std::countr_zero(m);
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    const auto r = mod_nonneg(a, 8);
    if ((twos & 1) != 0 && (r == 3 || r == 5)) result = -result;
    m >>= twos;
  }
  if (m == 1) return result;
  return result * jacobi_odd(mod_nonneg(a, m), m);
}

int chi_minus3_at_odd(std::int64_t n) {
  if (n < 0) throw std::domain_error("chi_minus3_at_odd: n must be nonnegative");
  static constexpr int table[3] = {1, 0, -1};
  return table[n % 3];
}

int chi_minus12(std::int64_t n) {
  if (n < 0) throw std::domain_error("chi_minus12: n must be nonnegative");
  static constexpr int table[12] = {0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1};
  return table[n % 12];
}

PartitionCache::PartitionCache(std::int64_t limit) : limit_(limit) {
  if (limit < 0) throw std::invalid_argument("PartitionCache: negative limit");
  values_.emplace_back(1);
}

std::int64_t PartitionCache::capacity() const {
  std::shared_lock lock(mutex_);
  return static_cast<std::int64_t>(values_.size()) - 1;
}

void PartitionCache::ensure(std::int64_t n) {
  if (n > limit_) {
    throw std::length_error("partition cache limit exceeded: p(" + std::to_string(n) +
                            ") requested, limit is " + std::to_string(limit_));
  }
  std::unique_lock lock(mutex_);
  mpz_class acc;
  for (auto k = static_cast<std::int64_t>(values_.size()); k <= n; ++k) {
    acc = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > k) break;
      const std::int64_t g2 = g1 + j;
      if ((j & 1) != 0) {
        mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), values_[k - g1].get_mpz_t());
        if (g2 <= k) mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), values_[k - g2].get_mpz_t());
      } else {
        mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), values_[k - g1].get_mpz_t());
        if (g2 <= k) mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), values_[k - g2].get_mpz_t());
      }
    }
    values_.push_back(acc);
  }
}

const mpz_class& PartitionCache::operator()(std::int64_t n) {
  static const mpz_class zero{0};
  if (n < 0) return zero;
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<std::int64_t>(values_.size())) return values_[n];
  }
  ensure(n);
  std::shared_lock lock(mutex_);
  return values_[n];
}

const mpz_class& partition_count(PartitionCache& cache, std::int64_t n) { return cache(n); }

std::uint64_t partition_enumerate(std::int64_t n) {
  if (n < 0 || n > kPartitionEnumerateBound) {
    throw std::out_of_range("partition_enumerate: n must lie in [0, " +
                            std::to_string(kPartitionEnumerateBound) + "]");
  }
  // Walk every non-increasing sequence summing to n in reverse lexicographic
  // order, starting from the single part n.
  if (n == 0) return 1;
  std::vector<std::int64_t> parts{n};
  std::uint64_t count = 0;
  for (;;) {
    ++count;
    // Collect trailing 1s, then decrement the last part larger than 1.
    std::int64_t rest = 0;
    while (!parts.empty() && parts.back() == 1) {
      ++rest;
      parts.pop_back();
    }
    if (parts.empty()) break;
    const std::int64_t k = --parts.back();
    ++rest;
    while (rest > k) {
      parts.push_back(k);
      rest -= k;
    }
    if (rest > 0) parts.push_back(rest);
  }
  return count;
}

double hardy_ramanujan_b() { return 2.0 * std::numbers::pi / std::sqrt(6.0); }

namespace {

void check_phat_domain(double x) {
  const double b = hardy_ramanujan_b();
  if (!(x > 1.0 / (b * b))) throw std::domain_error("hardy_ramanujan_phat: x must exceed 1/B^2");
}

}  // namespace

double hardy_ramanujan_phat(double x) {
  check_phat_domain(x);
  const double bs = hardy_ramanujan_b() * std::sqrt(x);
  return std::exp(bs) / (4.0 * std::sqrt(3.0) * x) * (1.0 - 1.0 / bs);
}

double log_hardy_ramanujan_phat(double x) {
  check_phat_domain(x);
  const double bs = hardy_ramanujan_b() * std::sqrt(x);
  return bs - std::log(4.0 * std::sqrt(3.0) * x) + std::log1p(-1.0 / bs);
}

double hardy_ramanujan_residual(std::int64_t n, const mpz_class& p_of_n) {
  using Real = boost::multiprecision::cpp_bin_float_100;
  if (n < 1) throw std::domain_error("hardy_ramanujan_residual: n must be positive");
  const Real pi = boost::math::constants::pi<Real>();
  const Real b = 2 * pi / sqrt(Real(6));
  const Real x = Real(n) - Real(1) / 24;
  const Real bs = b * sqrt(x);
  const Real phat = exp(bs) / (4 * sqrt(Real(3)) * x) * (1 - 1 / bs);
  const Real exact(p_of_n.get_str());
  const Real scaled = abs(exact - phat) * n * exp(-b * sqrt(Real(n)) / 2);
  return scaled.convert_to<double>();
}

double partition_ratio_approx(double X, double r) {
  if (!(X > 0)) throw std::domain_error("partition_ratio_approx: X must be positive");
  return std::exp(hardy_ramanujan_b() * r / (2.0 * std::sqrt(X)));
}

}  // namespace scc
