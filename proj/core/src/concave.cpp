#include "scc/concave.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace scc {

namespace {

using Parts = std::vector<std::int64_t>;

// Partitions of `total` into distinct parts >= min_part, each listed in
// strictly decreasing order.
void distinct_partitions(std::int64_t total, std::int64_t min_part, std::int64_t max_part,
                         Parts& current, std::vector<Parts>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t part = std::min(total, max_part); part >= min_part; --part) {
    current.push_back(part);
    distinct_partitions(total - part, min_part, part - 1, current, out);
    current.pop_back();
  }
}

std::vector<Parts> distinct_partitions(std::int64_t total, std::int64_t min_part) {
  std::vector<Parts> out;
  Parts current;
  distinct_partitions(total, min_part, total, current, out);
  return out;
}

std::int64_t triangular(std::int64_t a) { return a * (a + 1) / 2; }

const mpz_class& zero_count() {
  static const mpz_class zero{0};
  return zero;
}

// (-12 / k) q^{(k^2-1)/24} x^{(k-1)/2} for every k with a nonzero character
// and (k^2-1)/24 <= order.
template <typename Add>
void for_each_character_term(std::int64_t order, Add&& add) {
  for (std::int64_t k = 1; (k * k - 1) / 24 <= order; ++k) {
    const int chi = chi_minus12(k);
    if (chi == 0) continue;
    add((k * k - 1) / 24, (k - 1) / 2, chi);
  }
}

}  // namespace

std::int64_t SCComposition::weight() const {
  std::int64_t w = center;
  for (auto p : left) w += p;
  for (auto p : right) w += p;
  return w;
}

bool SCComposition::is_valid() const {
  if (center < 0) return false;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] <= center) return false;
    if (i > 0 && left[i - 1] <= left[i]) return false;
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    if (right[i] <= center) return false;
    if (i > 0 && right[i - 1] >= right[i]) return false;
  }
  return true;
}

std::vector<std::int64_t> SCComposition::parts() const {
  std::vector<std::int64_t> out(left);
  out.push_back(center);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

void for_each_scc(std::int64_t n, const std::function<void(const SCComposition&)>& visit) {
  if (n < 0 || n > kSccEnumerateBound) {
    throw std::out_of_range("enumerate_scc: n must lie in [0, " +
                            std::to_string(kSccEnumerateBound) + "]");
  }
  SCComposition lambda;
  for (std::int64_t c = 0; c <= n; ++c) {
    const std::int64_t rest = n - c;
    std::vector<std::vector<Parts>> sides(rest + 1);
    for (std::int64_t t = 0; t <= rest; ++t) sides[t] = distinct_partitions(t, c + 1);
    lambda.center = c;
    for (std::int64_t a = 0; a <= rest; ++a) {
      for (const auto& l : sides[a]) {
        for (const auto& r : sides[rest - a]) {
          lambda.left = l;
          lambda.right.assign(r.rbegin(), r.rend());
          visit(lambda);
        }
      }
    }
  }
}

std::vector<SCComposition> enumerate_scc(std::int64_t n) {
  std::vector<SCComposition> out;
  for_each_scc(n, [&](const SCComposition& c) { out.push_back(c); });
  return out;
}

std::int64_t max_rank(std::int64_t n) {
  if (n < 0) return -1;
  std::int64_t m = 0;
  while (triangular(m + 1) <= n) ++m;
  return m;
}

RankTable::RankTable(std::int64_t nmax) : nmax_(nmax) {
  if (nmax < 0) throw std::invalid_argument("RankTable: negative nmax");
  columns_.resize(nmax + 1);
  for (std::int64_t n = 0; n <= nmax; ++n) columns_[n].resize(max_rank(n) + 1);
}

const mpz_class& RankTable::count(std::int64_t m, std::int64_t n) const {
  if (n < 0 || n > nmax_) return zero_count();
  const auto a = static_cast<std::size_t>(m < 0 ? -m : m);
  if (a >= columns_[n].size()) return zero_count();
  return columns_[n][a];
}

void RankTable::set(std::int64_t m, std::int64_t n, mpz_class value) {
  if (n < 0 || n > nmax_ || m < 0 || m > max_rank(n)) {
    throw std::out_of_range("RankTable::set: (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") outside the stored support");
  }
  columns_[n][m] = std::move(value);
}

mpz_class RankTable::column_total(std::int64_t n) const {
  if (n < 0 || n > nmax_) return 0;
  mpz_class total = columns_[n][0];
  for (std::size_t a = 1; a < columns_[n].size(); ++a) total += 2 * columns_[n][a];
  return total;
}

RankTable rank_table_oracle(std::int64_t nmax) {
  if (nmax < 0 || nmax > kSccEnumerateBound) {
    throw std::out_of_range("rank_table_oracle: nmax must lie in [0, " +
                            std::to_string(kSccEnumerateBound) + "]");
  }
  RankTable table(nmax);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    std::map<std::int64_t, std::uint64_t> by_rank;
    for_each_scc(n, [&](const SCComposition& c) { ++by_rank[c.rank()]; });
    for (const auto& [m, c] : by_rank) {
      const auto mirror = by_rank.find(-m);
      if (mirror == by_rank.end() || mirror->second != c) {
        throw std::logic_error("rank_table_oracle: rank counts not symmetric at n=" +
                               std::to_string(n));
      }
      if (m >= 0) table.set(m, n, mpz_class(static_cast<unsigned long>(c)));
    }
  }
  return table;
}

TruncatedSeries vd_andrews(std::int64_t nmax) {
  const auto d = poch_neg(1, nmax);
  TruncatedSeries theta(nmax);
  for_each_character_term(nmax, [&](std::int64_t e, std::int64_t, int chi) { theta[e] += chi; });
  auto out = d * d * theta;
  out *= 2;
  for (std::int64_t k = 0; triangular(k) <= nmax; ++k) {
    if (k % 2 == 0) {
      out[triangular(k)] -= 1;
    } else {
      out[triangular(k)] += 1;
    }
  }
  return out;
}

TruncatedSeries vd_product(std::int64_t nmax) {
  TruncatedSeries out(nmax);
  // d holds (-q^{c+1}; q)_inf, grown one factor per step as c descends.
  auto d = TruncatedSeries::one(nmax);
  for (std::int64_t c = nmax; c >= 0; --c) {
    if (c < nmax) d.mul_binomial(+1, c + 1);
    const auto head = d.truncated(nmax - c);
    const auto sq = head * head;
    for (std::int64_t k = 0; k <= nmax - c; ++k) out[k + c] += sq[k];
  }
  return out;
}

TruncatedSeries v_concave(std::int64_t nmax) {
  TruncatedSeries out(nmax);
  // inv holds 1 / (q^{c+1}; q)_inf.
  auto inv = TruncatedSeries::one(nmax);
  for (std::int64_t c = nmax; c >= 0; --c) {
    if (c < nmax) inv.div_one_minus(c + 1);
    const auto head = inv.truncated(nmax - c);
    const auto sq = head * head;
    for (std::int64_t k = 0; k <= nmax - c; ++k) out[k + c] += sq[k];
  }
  return out;
}

RankSeries vdm_genfunc_series(std::int64_t nmax) {
  const auto poch = rank_poch_product(nmax);
  poch.check_support();
  RankSeries theta(nmax);
  for_each_character_term(nmax, [&](std::int64_t e, std::int64_t x, int chi) {
    theta.add_term(e, x, chi);
  });
  auto out = poch * theta;
  for (std::int64_t k = 0; triangular(k) <= nmax; ++k) {
    out.add_term(triangular(k), 2 * k + 1, k % 2 == 0 ? -1 : 1);
  }
  out.check_support();
  return out;
}

RankTable vdm_genfunc(std::int64_t nmax) {
  const auto series = vdm_genfunc_series(nmax);
  RankTable table(nmax);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (const auto& [m, c] : series.at(n)) {
      if (series.coeff(n, -m) != c) {
        throw std::logic_error("vdm_genfunc: expansion not symmetric at (" + std::to_string(m) +
                               ", " + std::to_string(n) + ")");
      }
      if (sgn(c) < 0) throw std::logic_error("vdm_genfunc: negative coefficient");
      if (m >= 0) table.set(m, n, c);
    }
  }
  return table;
}

mpz_class vdm_prop1(std::int64_t ell, std::int64_t N, PartitionCache& cache) {
  if (ell < 0) ell = -ell;
  mpz_class acc;
  if (N < 0) return acc;
  for (std::int64_t n = 0; 2 * n * (n + 1) + 3 * n * ell <= 3 * N; ++n) {
    const int chi = chi_minus3_at_odd(n);
    if (chi == 0) continue;
    const std::int64_t twice = 2 * n * (n + 1);
    if (twice % 3 != 0) {
      throw std::logic_error("vdm_prop1: non-integral exponent 2n(n+1)/3 at n=" +
                             std::to_string(n));
    }
    const auto& p = cache(N - twice / 3 - n * ell);
    if (chi > 0) {
      acc += p;
    } else {
      acc -= p;
    }
  }
  if (sgn(acc) < 0) throw std::logic_error("vdm_prop1: negative count");
  return acc;
}

mpz_class vdm_region(std::int64_t m, std::int64_t n, PartitionCache& cache) {
  const std::int64_t a = m < 0 ? -m : m;
  if (n < 0 || n >= a * (a + 5) / 2 + 4) {
    throw std::domain_error("vdm_region: (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") outside 0 <= n < |m|(|m|+5)/2 + 4");
  }
  return cache(n - triangular(a));
}

mpz_class vdm_telescoped(std::int64_t ell, std::int64_t N, PartitionCache& cache) {
  if (ell < 0) throw std::invalid_argument("vdm_telescoped: ell must be nonnegative");
  mpz_class acc;
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t q1 = 2 * k * (3 * k + 1) + 3 * k * ell;
    if (N - q1 < 0) break;
    const std::int64_t q2 = q1 + 8 * k + 4 + 2 * ell;
    acc += cache(N - q1);
    acc -= cache(N - q2);
  }
  return acc;
}

mpz_class rank_count(std::int64_t m, std::int64_t n, PartitionCache& cache) {
  const std::int64_t t = triangular(m < 0 ? -m : m);
  if (n < t) return 0;
  return vdm_prop1(m, n - t, cache);
}

mpz_class vd_fast(std::int64_t N, PartitionCache& cache) {
  if (N < 0) return 0;
  mpz_class total = vdm_prop1(0, N, cache);
  for (std::int64_t ell = 1; triangular(ell) <= N; ++ell) {
    total += 2 * vdm_prop1(ell, N - triangular(ell), cache);
  }
  return total;
}

RankTable rank_table_prop1(std::int64_t nmax, PartitionCache& cache) {
  cache.ensure(nmax);
  RankTable table(nmax);
  for (std::int64_t n = 0; n <= nmax; ++n) {
    for (std::int64_t m = 0; m <= max_rank(n); ++m) {
      table.set(m, n, vdm_prop1(m, n - triangular(m), cache));
    }
  }
  return table;
}

}  // namespace scc
