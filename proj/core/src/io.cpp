#include "scc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace scc::io {

using nlohmann::json;

namespace {

mpz_class parse_integer(const json& j) {
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::runtime_error("invalid integer string");
    return v;
  }
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  throw std::runtime_error("expected an integer or decimal string");
}

void dump(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string series_to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(c.get_str());
  return arr.dump();
}

TruncatedSeries series_from_json(std::string_view text) {
  const auto arr = json::parse(text);
  if (!arr.is_array() || arr.empty()) throw std::runtime_error("series JSON must be a non-empty array");
  std::vector<mpz_class> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) coeffs.push_back(parse_integer(c));
  return {static_cast<std::int64_t>(coeffs.size()) - 1, std::move(coeffs)};
}

std::string rank_series_to_json(const RankSeries& s) {
  json arr = json::array();
  for (std::int64_t n = 0; n <= s.order(); ++n) {
    json terms = json::array();
    for (const auto& [m, c] : s.at(n)) terms.push_back({{"m", m}, {"c", c.get_str()}});
    arr.push_back({{"n", n}, {"terms", std::move(terms)}});
  }
  return arr.dump();
}

RankSeries rank_series_from_json(std::string_view text) {
  const auto arr = json::parse(text);
  if (!arr.is_array() || arr.empty()) throw std::runtime_error("rank series JSON must be a non-empty array");
  std::int64_t order = 0;
  for (const auto& rec : arr) order = std::max(order, rec.at("n").get<std::int64_t>());
  RankSeries s(order);
  for (const auto& rec : arr) {
    const auto n = rec.at("n").get<std::int64_t>();
    for (const auto& t : rec.at("terms")) s.add_term(n, t.at("m").get<std::int64_t>(), parse_integer(t.at("c")));
  }
  return s;
}

void write_rank_table(std::ostream& out, const RankTable& table, Format format) {
  json arr = json::array();
  if (format == Format::csv) out << "n,m,count\n";
  for (std::int64_t n = 0; n <= table.nmax(); ++n) {
    const auto top = max_rank(n);
    for (std::int64_t m = -top; m <= top; ++m) {
      const auto& c = table.count(m, n);
      if (sgn(c) == 0) continue;
      if (format == Format::csv) {
        out << n << ',' << m << ',' << c.get_str() << '\n';
      } else {
        arr.push_back({{"n", n}, {"m", m}, {"count", c.get_str()}});
      }
    }
  }
  if (format == Format::json) dump(out, arr);
}

RankTable read_rank_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,m,count") throw std::runtime_error("rank table CSV: bad header");
  std::map<std::pair<std::int64_t, std::int64_t>, mpz_class> rows;
  std::int64_t nmax = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string n_s, m_s, c_s;
    if (!std::getline(fields, n_s, ',') || !std::getline(fields, m_s, ',') || !std::getline(fields, c_s)) {
      throw std::runtime_error("rank table CSV: malformed row '" + line + "'");
    }
    mpz_class c;
    if (c.set_str(c_s, 10) != 0) throw std::runtime_error("rank table CSV: bad count '" + c_s + "'");
    const auto n = std::stoll(n_s);
    nmax = std::max<std::int64_t>(nmax, n);
    rows[{n, std::stoll(m_s)}] = c;
  }
  RankTable table(nmax);
  for (const auto& [key, c] : rows) {
    const auto [n, m] = key;
    const auto mirror = rows.find({n, -m});
    if (mirror == rows.end() || mirror->second != c) throw std::runtime_error("rank table CSV: rows not symmetric in m");
    if (m >= 0) table.set(m, n, c);
  }
  return table;
}

void write_vd(std::ostream& out, std::span<const mpz_class> values, Format format) {
  if (format == Format::csv) {
    out << "n,vd\n";
    for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n].get_str() << '\n';
    return;
  }
  json arr = json::array();
  for (std::size_t n = 0; n < values.size(); ++n) arr.push_back({{"n", n}, {"vd", values[n].get_str()}});
  dump(out, arr);
}

void write_distribution(std::ostream& out, const DistributionCurve& curve, Format format) {
  if (format == Format::csv) {
    out << "x,empirical,gaussian,abs_diff\n";
    for (const auto& p : curve.points) {
      out << format_real(p.x) << ',' << format_real(p.empirical) << ',' << format_real(p.gaussian)
          << ',' << format_real(std::abs(p.empirical - p.gaussian)) << '\n';
    }
    return;
  }
  // Round-trip through the 12-digit text so both formats carry the same numbers.
  auto real = [](double v) { return std::stod(format_real(v)); };
  json arr = json::array();
  for (const auto& p : curve.points) {
    arr.push_back({{"x", real(p.x)},
                   {"empirical", real(p.empirical)},
                   {"gaussian", real(p.gaussian)},
                   {"abs_diff", real(std::abs(p.empirical - p.gaussian))}});
  }
  dump(out, arr);
}

void write_errors(std::ostream& out, std::span<const Theorem1Error> rows, Format format) {
  if (format == Format::csv) {
    out << "N,ell,exact_log,estimate_log,rel_err\n";
    for (const auto& r : rows) {
      out << r.N << ',' << r.ell << ',' << format_real(r.exact_log) << ','
          << format_real(r.estimate_log) << ',' << format_real(r.rel_err) << '\n';
    }
    return;
  }
  auto real = [](double v) { return std::stod(format_real(v)); };
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"N", r.N},
                   {"ell", r.ell},
                   {"exact_log", real(r.exact_log)},
                   {"estimate_log", real(r.estimate_log)},
                   {"rel_err", real(r.rel_err)}});
  }
  dump(out, arr);
}

}  // namespace scc::io
