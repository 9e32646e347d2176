// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "scc/asymptotics.hpp"
#include "scc/concave.hpp"
#include "scc/number_theory.hpp"
#include "scc/series.hpp"

namespace {

using namespace scc;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> check;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::int64_t floor_pow(std::int64_t N, double e) {
  return static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(N), e) + 1e-9));
}

PartitionCache& cache() {
  static PartitionCache c;
  return c;
}

Outcome characters() {
  for (std::int64_t n = 0; n <= 10'000; ++n) {
    if (chi_minus3_at_odd(n) != kronecker(-3, 2 * n + 1)) return {false, "chi(-3) differs at n=" + std::to_string(n)};
    if (chi_minus12(n) != kronecker(-12, n)) return {false, "chi(-12) differs at n=" + std::to_string(n)};
    if (kronecker(-12, n) != testing::kronecker_by_definition(-12, n)) {
      return {false, "kronecker differs from definition at n=" + std::to_string(n)};
    }
  }
  return {true, "n <= 10000"};
}

Outcome jacobi() {
  const auto r = jacobi_triple_check(30);
  if (r.holds) return {true, "q-order 30"};
  return {false, "mismatch at q^" + std::to_string(r.first_mismatch->first) + " x^" +
                     std::to_string(r.first_mismatch->second)};
}

Outcome vd_four_way() {
  const std::int64_t nmax = 40;
  const auto andrews = vd_andrews(nmax);
  const auto product = vd_product(nmax);
  const auto oracle = rank_table_oracle(nmax);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const auto fast = vd_fast(n, cache());
    if (andrews[n] != product[n] || product[n] != fast || fast != oracle.column_total(n)) {
      return {false, "n=" + std::to_string(n)};
    }
    if (n <= 16 && oracle.column_total(n) != testing::raw_count(static_cast<int>(n), true)) {
      return {false, "oracle vs raw scan at n=" + std::to_string(n)};
    }
  }
  return {true, "n <= 40, V_d(40)=" + andrews[nmax].get_str()};
}

Outcome rank_three_way() {
  const std::int64_t nmax = 30;
  const auto oracle = rank_table_oracle(nmax);
  const auto genfunc = vdm_genfunc(nmax);
  if (!(oracle == genfunc)) return {false, "genfunc differs from oracle"};
  std::int64_t cells = 0;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (std::int64_t m = -max_rank(n) - 1; m <= max_rank(n) + 1; ++m) {
      const std::int64_t a = m < 0 ? -m : m;
      const auto expected = oracle.count(m, n);
      if (vdm_prop1(m, n - a * (a + 1) / 2, cache()) != expected) {
        return {false, "prop1 at m=" + std::to_string(m) + " n=" + std::to_string(n)};
      }
      if (vdm_telescoped(a, n - a * (a + 1) / 2, cache()) != expected) {
        return {false, "telescoped at m=" + std::to_string(m) + " n=" + std::to_string(n)};
      }
      ++cells;
    }
  }
  return {true, std::to_string(cells) + " cells, n <= 30"};
}

Outcome region() {
  const auto oracle = rank_table_oracle(30);
  std::int64_t cells = 0;
  for (std::int64_t m = -8; m <= 8; ++m) {
    const std::int64_t a = m < 0 ? -m : m;
    for (std::int64_t n = 0; n < a * (a + 5) / 2 + 4 && n <= 30; ++n) {
      if (vdm_region(m, n, cache()) != oracle.count(m, n)) {
        return {false, "m=" + std::to_string(m) + " n=" + std::to_string(n)};
      }
      ++cells;
    }
  }
  return {true, std::to_string(cells) + " cells"};
}

Outcome sums_and_symmetry() {
  const auto series = vdm_genfunc_series(30);
  const auto andrews = vd_andrews(30);
  for (std::int64_t n = 0; n <= 30; ++n) {
    mpz_class total = 0;
    for (const auto& [m, c] : series.at(n)) {
      if (series.coeff(n, -m) != c) return {false, "asymmetric at m=" + std::to_string(m) + " n=" + std::to_string(n)};
      total += c;
    }
    if (total != andrews[n]) return {false, "column sum at n=" + std::to_string(n)};
  }
  return {true, "n <= 30"};
}

Outcome residual() {
  double worst = 0;
  for (std::int64_t n : {100, 200, 500, 1000, 2000, 5000}) {
    worst = std::max(worst, hardy_ramanujan_residual(n, cache()(n)));
  }
  return {worst <= 10.0, "max " + fmt(worst) + " <= 10"};
}

double theorem1_max_error(std::int64_t N) {
  double worst = 0;
  for (std::int64_t ell : {std::int64_t{0}, floor_pow(N, 0.25), floor_pow(N, 0.375), floor_pow(N, 0.5)}) {
    worst = std::max(worst, theorem1_error(ell, N, cache()).rel_err);
  }
  return worst;
}

Outcome theorem1() {
  const double mid = theorem1_max_error(10'000);
  const double small = theorem1_max_error(2'500);
  const double large = theorem1_max_error(40'000);
  return {mid <= 0.15 && large < small,
          "N=1e4 max " + fmt(mid) + " <= 0.15; N=40000 " + fmt(large) + " < N=2500 " + fmt(small)};
}

double leading_ratio(std::int64_t N) {
  return std::exp(LogScaled::from_mpz(vd_fast(N, cache())).log() - vd_leading(N).log());
}

Outcome leading_term() {
  const double r_small = leading_ratio(2'000);
  const double r_large = leading_ratio(20'000);
  return {r_large >= 0.9 && r_large <= 1.1 && std::abs(r_large - 1) < std::abs(r_small - 1),
          "ratio " + fmt(r_large) + " at N=20000, " + fmt(r_small) + " at N=2000"};
}

Outcome gaussian_local() {
  const std::int64_t N = 10'000;
  const mpz_class total = vd_fast(N, cache());
  double worst = 0;
  for (std::int64_t m : {std::int64_t{0}, floor_pow(N, 0.125), floor_pow(N, 0.25)}) {
    const double exact = mpq_class(rank_count(m, N, cache()), total).get_d();
    worst = std::max(worst, std::abs(exact / gaussian_ratio(m, N) - 1));
  }
  return {worst <= 0.10, "max rel " + fmt(worst) + " <= 0.1"};
}

Outcome distribution() {
  const auto grid = uniform_grid(-4.0, 4.0, 0.1);
  const double d3000 = empirical_rank_cdf(3000, grid, cache()).sup_distance();
  const double d300 = empirical_rank_cdf(300, grid, cache()).sup_distance();
  return {d3000 <= 0.08 && d3000 < d300, "sup " + fmt(d3000) + " at N=3000 <= 0.08, " + fmt(d300) + " at N=300"};
}

Outcome lemma4() {
  const double d2 = std::abs(lemma4_f(1e-2, 0) - 1);
  const double d3 = std::abs(lemma4_f(1e-3, 0) - 1);
  const double d4 = std::abs(lemma4_f(1e-4, 0) - 1);
  return {d2 > d3 && d3 > d4 && d4 < 0.05, "deviations " + fmt(d2) + ", " + fmt(d3) + ", " + fmt(d4)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "characters agree with Kronecker symbol", 1, characters},
      {2, "Jacobi triple product", 10, jacobi},
      {3, "V_d(n) four-way exact equivalence", 120, vd_four_way},
      {4, "V_d(m,n) exact equivalence", 120, rank_three_way},
      {5, "region formula", 60, region},
      {6, "column sums and symmetry", 60, sums_and_symmetry},
      {7, "partition residual bounded", 60, residual},
      {8, "uniform estimate and decay", 300, theorem1},
      {9, "leading term of V_d(N)", 300, leading_term},
      {10, "local Gaussian ratio", 300, gaussian_local},
      {11, "rank distribution vs normal CDF", 300, distribution},
      {12, "f(alpha) tends to 1", 60, lemma4},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.time_limit_s;
    const bool ok = r.passed && in_time;
    if (!ok) ++failures;
    std::printf("%s  %2d  %-40s %s [%.2fs%s]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), r.detail.c_str(), secs,
                in_time ? "" : ", over time limit");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
