#include "scc/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace scc {

namespace {

void require_order(std::int64_t order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

void require_same_order(std::int64_t a, std::int64_t b) {
  if (a != b) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

std::int64_t ceil_sqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return r;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::int64_t order) : order_(order) {
  require_order(order);
  coeffs_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(std::int64_t order, std::vector<mpz_class> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  require_order(order);
  if (static_cast<std::int64_t>(coeffs_.size()) != order + 1) {
    throw std::invalid_argument("TruncatedSeries: expected " + std::to_string(order + 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

TruncatedSeries TruncatedSeries::one(std::int64_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t order) const {
  if (order < 0 || order > order_) throw std::invalid_argument("truncated: order out of range");
  return {order, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + order + 1)};
}

TruncatedSeries& TruncatedSeries::mul_binomial(int sign, std::int64_t degree) {
  if (degree < 0) throw std::invalid_argument("mul_binomial: negative degree");
  if (degree == 0) {
    for (auto& c : coeffs_) c *= (1 + sign);
    return *this;
  }
  // Descending so each source coefficient is read before it is updated.
  for (std::int64_t k = order_; k >= degree; --k) {
    if (sign > 0) {
      coeffs_[k] += coeffs_[k - degree];
    } else {
      coeffs_[k] -= coeffs_[k - degree];
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::div_one_minus(std::int64_t degree) {
  if (degree < 1) throw std::invalid_argument("div_one_minus: degree must be positive");
  for (std::int64_t k = degree; k <= order_; ++k) coeffs_[k] += coeffs_[k - degree];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (std::int64_t k = 0; k <= order_; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (std::int64_t k = 0; k <= order_; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const mpz_class& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a.order_, b.order_);
  TruncatedSeries out(a.order_);
  for (std::int64_t i = 0; i <= a.order_; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
    for (std::int64_t j = 0; i + j <= a.order_; ++j) {
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
      return a + b;
    case SeriesOp::sub:
      return a - b;
    case SeriesOp::mul:
      return a * b;
  }
  throw std::invalid_argument("series_arith: unknown op");
}

TruncatedSeries poch_neg(std::int64_t shift, std::int64_t order) {
  if (shift < 1) throw std::invalid_argument("poch_neg: shift must be positive");
  auto s = TruncatedSeries::one(order);
  for (std::int64_t d = shift; d <= order; ++d) s.mul_binomial(+1, d);
  return s;
}

TruncatedSeries euler_product(std::int64_t order) {
  auto s = TruncatedSeries::one(order);
  for (std::int64_t d = 1; d <= order; ++d) s.mul_binomial(-1, d);
  return s;
}

TruncatedSeries inverse_euler(std::int64_t order) {
  auto s = TruncatedSeries::one(order);
  for (std::int64_t d = 1; d <= order; ++d) s.div_one_minus(d);
  return s;
}

RankSeries::RankSeries(std::int64_t order) : order_(order) {
  require_order(order);
  terms_.resize(order + 1);
}

RankSeries::RankSeries(const TruncatedSeries& s) : RankSeries(s.order()) {
  for (std::int64_t n = 0; n <= order_; ++n) add_term(n, 0, s[n]);
}

RankSeries RankSeries::one(std::int64_t order) {
  RankSeries s(order);
  s.add_term(0, 0, 1);
  return s;
}

mpz_class RankSeries::coeff(std::int64_t n, std::int64_t m) const {
  if (n < 0 || n > order_) return 0;
  const auto it = terms_[n].find(m);
  return it == terms_[n].end() ? mpz_class{0} : it->second;
}

void RankSeries::add_term(std::int64_t n, std::int64_t m, const mpz_class& c) {
  if (n < 0) throw std::invalid_argument("add_term: negative q-power");
  if (n > order_ || sgn(c) == 0) return;
  auto [it, inserted] = terms_[n].try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_[n].erase(it);
  }
}

RankSeries& RankSeries::mul_binomial(std::int64_t x_exp, std::int64_t q_deg) {
  if (q_deg < 0) throw std::invalid_argument("mul_binomial: negative q-degree");
  if (q_deg == 0) {
    // (1 + x^e) at the same q-power: add a shifted copy of each map.
    for (auto& terms : terms_) {
      const Terms copy = terms;
      for (const auto& [m, c] : copy) {
        auto [it, inserted] = terms.try_emplace(m + x_exp, c);
        if (!inserted) {
          it->second += c;
          if (sgn(it->second) == 0) terms.erase(it);
        }
      }
    }
    return *this;
  }
  for (std::int64_t n = order_; n >= q_deg; --n) {
    for (const auto& [m, c] : terms_[n - q_deg]) add_term(n, m + x_exp, c);
  }
  return *this;
}

std::int64_t RankSeries::support_bound(std::int64_t n) {
  return ceil_sqrt(2 * n) + ceil_sqrt(24 * n + 1) + 2;
}

void RankSeries::check_support() const {
  for (std::int64_t n = 0; n <= order_; ++n) {
    if (terms_[n].empty()) continue;
    const auto bound = support_bound(n);
    if (terms_[n].begin()->first < -bound || terms_[n].rbegin()->first > bound) {
      throw std::logic_error("RankSeries: x-exponent outside support bound at q^" +
                             std::to_string(n));
    }
  }
}

TruncatedSeries RankSeries::at_x_one() const {
  TruncatedSeries out(order_);
  for (std::int64_t n = 0; n <= order_; ++n) {
    for (const auto& [m, c] : terms_[n]) out[n] += c;
  }
  return out;
}

RankSeries& RankSeries::operator+=(const RankSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (std::int64_t n = 0; n <= order_; ++n) {
    for (const auto& [m, c] : rhs.terms_[n]) add_term(n, m, c);
  }
  return *this;
}

RankSeries& RankSeries::operator-=(const RankSeries& rhs) {
  require_same_order(order_, rhs.order_);
  for (std::int64_t n = 0; n <= order_; ++n) {
    for (const auto& [m, c] : rhs.terms_[n]) add_term(n, m, -c);
  }
  return *this;
}

RankSeries operator*(const RankSeries& a, const RankSeries& b) {
  require_same_order(a.order_, b.order_);
  RankSeries out(a.order_);
  mpz_class prod;
  for (std::int64_t i = 0; i <= a.order_; ++i) {
    for (const auto& [ma, ca] : a.terms_[i]) {
      for (std::int64_t j = 0; i + j <= a.order_; ++j) {
        for (const auto& [mb, cb] : b.terms_[j]) {
          prod = ca * cb;
          out.add_term(i + j, ma + mb, prod);
        }
      }
    }
  }
  return out;
}

RankSeries rank_poch_product(std::int64_t order) {
  auto s = RankSeries::one(order);
  s.mul_binomial(+1, 0);
  for (std::int64_t j = 1; j <= order; ++j) {
    s.mul_binomial(+1, j);
    s.mul_binomial(-1, j);
  }
  return s;
}

RankSeries jacobi_product_side(std::int64_t order) {
  RankSeries s(euler_product(order));
  for (std::int64_t j = 1; j <= order; ++j) s.mul_binomial(+1, j);
  for (std::int64_t j = 0; j <= order; ++j) s.mul_binomial(-1, j);
  return s;
}

RankSeries jacobi_theta_side(std::int64_t order) {
  RankSeries s(order);
  // n(n+1)/2 is symmetric under n -> -1-n, so walk n >= 0 and mirror.
  for (std::int64_t n = 0; n * (n + 1) / 2 <= order; ++n) {
    s.add_term(n * (n + 1) / 2, n, 1);
    s.add_term(n * (n + 1) / 2, -1 - n, 1);
  }
  return s;
}

std::optional<std::pair<std::int64_t, std::int64_t>> first_difference(const RankSeries& a,
                                                                      const RankSeries& b) {
  require_same_order(a.order(), b.order());
  for (std::int64_t n = 0; n <= a.order(); ++n) {
    const auto& ta = a.at(n);
    const auto& tb = b.at(n);
    auto ia = ta.begin();
    auto ib = tb.begin();
    while (ia != ta.end() || ib != tb.end()) {
      if (ib == tb.end() || (ia != ta.end() && ia->first < ib->first)) return {{n, ia->first}};
      if (ia == ta.end() || ib->first < ia->first) return {{n, ib->first}};
      if (ia->second != ib->second) return {{n, ia->first}};
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

JacobiReport jacobi_triple_check(std::int64_t order) {
  const auto lhs = jacobi_product_side(order);
  const auto rhs = jacobi_theta_side(order);
  lhs.check_support();
  JacobiReport report;
  report.first_mismatch = first_difference(lhs, rhs);
  report.holds = !report.first_mismatch.has_value();
  return report;
}

}  // namespace scc
