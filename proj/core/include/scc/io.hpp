#pragma once

// CSV and JSON forms of the toolkit's tables and series. Exact integers are
// written in decimal with no exponent; JSON carries them as strings so no
// precision is lost. Reals use 12 significant digits. Output uses LF only.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "scc/asymptotics.hpp"
#include "scc/concave.hpp"
#include "scc/series.hpp"

namespace scc::io {

enum class Format { csv, json };

std::string format_real(double v);

// [ "c0", "c1", ... ]
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(std::string_view text);

// [ {"n": 0, "terms": [ {"m": -1, "c": "1"}, ... ]}, ... ]
std::string rank_series_to_json(const RankSeries& s);
RankSeries rank_series_from_json(std::string_view text);

/// `n,m,count`, one row per nonzero entry with both signs of m, sorted by (n, m).
void write_rank_table(std::ostream& out, const RankTable& table, Format format);
/// Reads the CSV form back. Throws std::runtime_error on malformed input or
/// when the rows are not symmetric in m.
RankTable read_rank_table_csv(std::istream& in);

/// `n,vd` with values[n] = V_d(n).
void write_vd(std::ostream& out, std::span<const mpz_class> values, Format format);

/// `x,empirical,gaussian,abs_diff`.
void write_distribution(std::ostream& out, const DistributionCurve& curve, Format format);

/// `N,ell,exact_log,estimate_log,rel_err`.
void write_errors(std::ostream& out, std::span<const Theorem1Error> rows, Format format);

}  // namespace scc::io
