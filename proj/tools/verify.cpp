#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "scc/asymptotics.hpp"
#include "scc/concave.hpp"
#include "scc/io.hpp"
#include "scc/series.hpp"

namespace scc::verify {

namespace {

using Results = std::vector<CheckResult>;

std::int64_t ifloor_root(std::int64_t N, double power) {
  return static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(N), power) + 1e-9));
}

void characters(std::int64_t max, Results& out) {
  for (std::int64_t n = 0; n <= max; ++n) {
    if (chi_minus12(n) != kronecker(-12, n)) {
      out.push_back({"chi_minus12 == kronecker(-12, n)", false, "n=" + std::to_string(n)});
      return;
    }
    if (chi_minus3_at_odd(n) != kronecker(-3, 2 * n + 1)) {
      out.push_back({"chi_minus3_at_odd == kronecker(-3, 2n+1)", false, "n=" + std::to_string(n)});
      return;
    }
  }
  out.push_back({"characters agree with kronecker", true, "n <= " + std::to_string(max)});
}

void identities(std::int64_t max, PartitionCache& cache, Results& out) {
  const auto jacobi = jacobi_triple_check(max);
  std::string detail = "order " + std::to_string(max);
  if (jacobi.first_mismatch) {
    detail = "first mismatch at q^" + std::to_string(jacobi.first_mismatch->first) + " x^" +
             std::to_string(jacobi.first_mismatch->second);
  }
  out.push_back({"Jacobi triple product", jacobi.holds, detail});

  const auto inv = inverse_euler(max);
  bool ok = true;
  for (std::int64_t k = 0; k <= max; ++k) ok = ok && inv[k] == cache(k);
  out.push_back({"1/(q;q) coefficients equal p(k)", ok, "order " + std::to_string(max)});

  auto twice_square = poch_neg(1, max) * poch_neg(1, max);
  twice_square *= 2;
  out.push_back({"rank Pochhammer product at x=1 equals 2(-q;q)^2",
                 rank_poch_product(max).at_x_one() == twice_square, "order " + std::to_string(max)});

  const auto n4 = std::min(max, kSccEnumerateBound);
  const auto andrews = vd_andrews(n4);
  const auto product = vd_product(n4);
  const auto oracle = rank_table_oracle(n4);
  std::string bad;
  for (std::int64_t n = 0; n <= n4 && bad.empty(); ++n) {
    const auto fast = vd_fast(n, cache);
    if (!(andrews[n] == product[n] && product[n] == fast && fast == oracle.column_total(n))) {
      bad = "n=" + std::to_string(n);
    }
  }
  out.push_back({"V_d(n): oracle = Andrews = product = fast", bad.empty(),
                 bad.empty() ? "n <= " + std::to_string(n4) : bad});
}

void oracle_suite(std::int64_t max, PartitionCache& cache, Results& out) {
  const auto nmax = std::min(max, kSccEnumerateBound);
  const auto oracle = rank_table_oracle(nmax);
  const auto genfunc = vdm_genfunc(nmax);
  const auto prop1 = rank_table_prop1(nmax, cache);
  bool telescoped_ok = true;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (std::int64_t m = 0; m <= max_rank(n); ++m) {
      telescoped_ok = telescoped_ok && vdm_telescoped(m, n - m * (m + 1) / 2, cache) == oracle.count(m, n);
    }
  }
  const std::string range = "n <= " + std::to_string(nmax);
  out.push_back({"V_d(m,n): oracle = genfunc = prop1 = telescoped",
                 oracle == genfunc && genfunc == prop1 && telescoped_ok, range});

  bool region_ok = true;
  for (std::int64_t m = -8; m <= 8; ++m) {
    const std::int64_t a = m < 0 ? -m : m;
    for (std::int64_t n = 0; n < a * (a + 5) / 2 + 4 && n <= nmax; ++n) {
      region_ok = region_ok && vdm_region(m, n, cache) == oracle.count(m, n);
    }
  }
  out.push_back({"region formula matches oracle", region_ok, "|m| <= 8, " + range});

  const auto series = vdm_genfunc_series(nmax);
  bool sym_ok = true;
  bool sums_ok = true;
  bool support_ok = true;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (const auto& [m, c] : series.at(n)) sym_ok = sym_ok && series.coeff(n, -m) == c;
    sums_ok = sums_ok && genfunc.column_total(n) == vd_fast(n, cache);
    for (std::int64_t m = -n - 1; m <= n + 1; ++m) {
      const bool zero = sgn(oracle.count(m, n)) == 0;
      support_ok = support_ok && zero == (2 * n < std::abs(m) * (std::abs(m) + 1));
    }
  }
  out.push_back({"symmetry V_d(m,n) = V_d(-m,n)", sym_ok, range});
  out.push_back({"column sums equal V_d(n)", sums_ok, range});
  out.push_back({"support V_d(m,n) = 0 iff n < |m|(|m|+1)/2", support_ok, range});
}

void asymptotic(PartitionCache& cache, Results& out) {
  cache.ensure(40'000);

  double residual = 0;
  for (std::int64_t n : {100, 200, 500, 1000, 2000, 5000}) {
    residual = std::max(residual, hardy_ramanujan_residual(n, cache(n)));
  }
  out.push_back({"Hardy-Ramanujan residual bounded", residual <= 10.0,
                 "max scaled residual " + io::format_real(residual) + " <= 10"});

  auto theorem_err = [&](std::int64_t N) {
    double worst = 0;
    for (std::int64_t ell : {std::int64_t{0}, ifloor_root(N, 0.25), ifloor_root(N, 0.375), ifloor_root(N, 0.5)}) {
      worst = std::max(worst, theorem1_error(ell, N, cache).rel_err);
    }
    return worst;
  };
  const double e_mid = theorem_err(10'000);
  const double e_small = theorem_err(2'500);
  const double e_large = theorem_err(40'000);
  out.push_back({"uniform estimate at N=10^4", e_mid <= 0.15, "max rel err " + io::format_real(e_mid) + " <= 0.15"});
  out.push_back({"uniform estimate error decays", e_large < e_small,
                 io::format_real(e_large) + " (N=40000) < " + io::format_real(e_small) + " (N=2500)"});

  auto lead_ratio = [&](std::int64_t N) { return (LogScaled::from_mpz(vd_fast(N, cache)) / vd_leading(N)).to_double(); };
  const double r_small = lead_ratio(2'000);
  const double r_large = lead_ratio(20'000);
  out.push_back({"V_d(N) leading term", r_large >= 0.9 && r_large <= 1.1 &&
                                            std::abs(r_large - 1) < std::abs(r_small - 1),
                 "ratio " + io::format_real(r_large) + " at 20000, " + io::format_real(r_small) + " at 2000"});

  const std::int64_t N = 10'000;
  const auto total = LogScaled::from_mpz(vd_fast(N, cache));
  double worst = 0;
  for (std::int64_t m : {std::int64_t{0}, ifloor_root(N, 0.125), ifloor_root(N, 0.25)}) {
    const double exact = (LogScaled::from_mpz(rank_count(m, N, cache)) / total).to_double();
    worst = std::max(worst, std::abs(exact / gaussian_ratio(m, N) - 1));
  }
  out.push_back({"Gaussian local ratio at N=10^4", worst <= 0.10, "max rel err " + io::format_real(worst) + " <= 0.1"});

  const double d2 = std::abs(lemma4_f(1e-2, 0) - 1);
  const double d3 = std::abs(lemma4_f(1e-3, 0) - 1);
  const double d4 = std::abs(lemma4_f(1e-4, 0) - 1);
  out.push_back({"f(alpha) -> 1", d2 > d3 && d3 > d4 && d4 < 0.05,
                 io::format_real(d2) + ", " + io::format_real(d3) + ", " + io::format_real(d4)});
}

void distribution(PartitionCache& cache, Results& out) {
  const auto grid = uniform_grid(-4.0, 4.0, 0.1);
  const double far = empirical_rank_cdf(3000, grid, cache).sup_distance();
  const double near = empirical_rank_cdf(300, grid, cache).sup_distance();
  out.push_back({"rank distribution approaches normal", far <= 0.08 && far < near,
                 "sup distance " + io::format_real(far) + " (N=3000), " + io::format_real(near) + " (N=300)"});
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, std::optional<std::int64_t> max, PartitionCache& cache) {
  Results out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::characters) characters(max.value_or(10'000), out);
  if (all || suite == Suite::identities) identities(max.value_or(30), cache, out);
  if (all || suite == Suite::oracle) oracle_suite(max.value_or(30), cache, out);
  if (all || suite == Suite::asymptotic) asymptotic(cache, out);
  if (all || suite == Suite::distribution) distribution(cache, out);
  return out;
}

}  // namespace scc::verify
