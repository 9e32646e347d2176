#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "scc/number_theory.hpp"
#include "scc/series.hpp"

namespace scc {

/// A strongly concave composition, left parts > center < right parts.
///
/// `left` reads left to right (strictly decreasing), `right` reads left to
/// right (strictly increasing), every side part exceeds `center`.
struct SCComposition {
  std::vector<std::int64_t> left;
  std::int64_t center = 0;
  std::vector<std::int64_t> right;

  std::int64_t weight() const;
  /// Parts after the center minus parts before it.
  std::int64_t rank() const { return static_cast<std::int64_t>(right.size() - left.size()); }
  bool is_valid() const;
  /// The full sequence a_1, ..., a_s.
  std::vector<std::int64_t> parts() const;

  friend bool operator==(const SCComposition&, const SCComposition&) = default;
};

inline constexpr std::int64_t kSccEnumerateBound = 40;

/// Calls `visit` once per strongly concave composition of n.
/// Throws std::out_of_range for n outside [0, kSccEnumerateBound].
void for_each_scc(std::int64_t n, const std::function<void(const SCComposition&)>& visit);

std::vector<SCComposition> enumerate_scc(std::int64_t n);

/// Largest M with M(M+1)/2 <= n; V_d(m, n) vanishes for |m| > M.
std::int64_t max_rank(std::int64_t n);

/// Exact counts V_d(m, n) for 0 <= n <= nmax.
///
/// Only m >= 0 is stored; reads at negative m mirror. Builders that produce
/// both signs must check symmetry before calling set().
class RankTable {
 public:
  explicit RankTable(std::int64_t nmax = 0);

  std::int64_t nmax() const { return nmax_; }
  /// V_d(m, n); zero outside the support.
  const mpz_class& count(std::int64_t m, std::int64_t n) const;
  /// Requires 0 <= m <= max_rank(n).
  void set(std::int64_t m, std::int64_t n, mpz_class value);
  /// sum over all m of V_d(m, n).
  mpz_class column_total(std::int64_t n) const;

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  std::int64_t nmax_;
  std::vector<std::vector<mpz_class>> columns_;
};

RankTable rank_table_oracle(std::int64_t nmax);

/// v_d(q) from Andrews' theta / false-theta identity.
TruncatedSeries vd_andrews(std::int64_t nmax);

/// v_d(q) = sum_c (-q^{c+1}; q)^2_inf q^c.
TruncatedSeries vd_product(std::int64_t nmax);

/// v(q) = sum_c q^c / (q^{c+1}; q)^2_inf, concave compositions.
TruncatedSeries v_concave(std::int64_t nmax);

/// Bivariate generating function sum V_d(m, n) x^m q^n, both signs of m.
RankSeries vdm_genfunc_series(std::int64_t nmax);

/// vdm_genfunc_series folded into a RankTable. Throws std::logic_error if the
/// expansion is not symmetric in m.
RankTable vdm_genfunc(std::int64_t nmax);

/// V_d(ell, N + |ell|(|ell|+1)/2) as a character-weighted sum of p-values.
mpz_class vdm_prop1(std::int64_t ell, std::int64_t N, PartitionCache& cache);

/// V_d(m, n) = p(n - |m|(|m|+1)/2), valid for 0 <= n < |m|(|m|+5)/2 + 4.
/// Throws std::domain_error outside that region.
mpz_class vdm_region(std::int64_t m, std::int64_t n, PartitionCache& cache);

/// The same sum as vdm_prop1, regrouped as sum [p(N - Q1) - p(N - Q2)]
/// with Q1 = 2k(3k+1) + 3k*ell and Q2 = Q1 + 8k + 4 + 2ell. Requires ell >= 0.
mpz_class vdm_telescoped(std::int64_t ell, std::int64_t N, PartitionCache& cache);

/// V_d(m, n) through vdm_prop1; zero below the support.
mpz_class rank_count(std::int64_t m, std::int64_t n, PartitionCache& cache);

/// V_d(N) = sum over ell of V_d(ell, N).
mpz_class vd_fast(std::int64_t N, PartitionCache& cache);

/// RankTable through vdm_prop1 for every (m, n) with n <= nmax.
RankTable rank_table_prop1(std::int64_t nmax, PartitionCache& cache);

}  // namespace scc
