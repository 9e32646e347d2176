#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace scc {

/// Power series in q with exact integer coefficients, known modulo
/// q^{order+1}. Arithmetic never touches coefficients above the order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::int64_t order = 0);
  TruncatedSeries(std::int64_t order, std::vector<mpz_class> coeffs);

  static TruncatedSeries one(std::int64_t order);

  std::int64_t order() const { return order_; }
  const mpz_class& operator[](std::int64_t k) const { return coeffs_[k]; }
  mpz_class& operator[](std::int64_t k) { return coeffs_[k]; }
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  /// Same series known to a lower order.
  TruncatedSeries truncated(std::int64_t order) const;

  /// In-place multiplication by (1 + sign * q^degree), sign in {+1, -1}.
  TruncatedSeries& mul_binomial(int sign, std::int64_t degree);
  /// In-place division by (1 - q^degree), degree >= 1.
  TruncatedSeries& div_one_minus(std::int64_t degree);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const mpz_class& k);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::int64_t order_;
  std::vector<mpz_class> coeffs_;
};

enum class SeriesOp { add, sub, mul };

/// Throws std::invalid_argument when the orders differ.
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

/// (-q^shift; q)_inf = prod_{j>=0} (1 + q^{shift+j}) mod q^{order+1}.
TruncatedSeries poch_neg(std::int64_t shift, std::int64_t order);

/// (q; q)_inf mod q^{order+1}.
TruncatedSeries euler_product(std::int64_t order);

/// 1/(q; q)_inf = sum p(k) q^k mod q^{order+1}.
TruncatedSeries inverse_euler(std::int64_t order);

/// Series in q whose coefficients are Laurent polynomials in x.
///
/// Each q-coefficient is a sparse map from x-exponent to a nonzero integer.
class RankSeries {
 public:
  using Terms = std::map<std::int64_t, mpz_class>;

  explicit RankSeries(std::int64_t order = 0);
  /// Embeds a univariate series at x^0.
  explicit RankSeries(const TruncatedSeries& s);

  static RankSeries one(std::int64_t order);

  std::int64_t order() const { return order_; }
  const Terms& at(std::int64_t n) const { return terms_[n]; }
  mpz_class coeff(std::int64_t n, std::int64_t m) const;

  /// Adds c * x^m q^n; dropped when n exceeds the order.
  void add_term(std::int64_t n, std::int64_t m, const mpz_class& c);

  /// In-place multiplication by (1 + x^x_exp q^q_deg).
  RankSeries& mul_binomial(std::int64_t x_exp, std::int64_t q_deg);

  /// Coarse bound on |m| at q^n: ceil(sqrt(2n)) + ceil(sqrt(24n+1)) + 2.
  static std::int64_t support_bound(std::int64_t n);
  /// Throws std::logic_error if some term lies outside support_bound.
  void check_support() const;

  /// Substitutes x = 1.
  TruncatedSeries at_x_one() const;

  RankSeries& operator+=(const RankSeries& rhs);
  RankSeries& operator-=(const RankSeries& rhs);
  friend RankSeries operator+(RankSeries a, const RankSeries& b) { return a += b; }
  friend RankSeries operator-(RankSeries a, const RankSeries& b) { return a -= b; }
  friend RankSeries operator*(const RankSeries& a, const RankSeries& b);
  friend bool operator==(const RankSeries& a, const RankSeries& b) = default;

 private:
  std::int64_t order_;
  std::vector<Terms> terms_;
};

/// (-x; q)_inf (-x^{-1} q; q)_inf truncated at q^order.
RankSeries rank_poch_product(std::int64_t order);

/// (q;q)_inf (-xq;q)_inf (-x^{-1};q)_inf, built factor by factor.
RankSeries jacobi_product_side(std::int64_t order);

/// sum over n in Z of q^{n(n+1)/2} x^n.
RankSeries jacobi_theta_side(std::int64_t order);

struct JacobiReport {
  bool holds = false;
  /// First (q-power n, x-exponent m) where the two sides differ.
  std::optional<std::pair<std::int64_t, std::int64_t>> first_mismatch;
};

JacobiReport jacobi_triple_check(std::int64_t order);

/// First (n, m) where a and b differ, in (n, m) order. Requires equal orders.
std::optional<std::pair<std::int64_t, std::int64_t>> first_difference(const RankSeries& a,
                                                                      const RankSeries& b);

}  // namespace scc
