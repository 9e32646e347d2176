#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "scc/asymptotics.hpp"
#include "scc/concave.hpp"
#include "scc/io.hpp"
#include "scc/number_theory.hpp"
#include "scc/series.hpp"
#include "verify.hpp"

namespace scc::cli {

namespace {

struct Options {
  std::int64_t n = 0;
  std::int64_t max = 0;
  std::int64_t ell = 0;
  double grid_step = 0.1;
  std::string method;
  std::string format = "csv";
  std::string asym_format = "text";
  std::string suite;
  std::string out_path;
  std::optional<std::int64_t> verify_max;
};

// 12 significant digits from a log value, e.g. 3.14159265359e+1234.
std::string format_log_scaled(const LogScaled& v) {
  if (v.is_zero()) return "0";
  const double l10 = v.log() / std::log(10.0);
  auto exponent = static_cast<long long>(std::floor(l10));
  double mantissa = std::pow(10.0, l10 - static_cast<double>(exponent));
  if (mantissa >= 9.999999999995) {
    mantissa /= 10;
    ++exponent;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11fe%+lld", mantissa, exponent);
  return buf;
}

io::Format parse_format(const std::string& s) { return s == "json" ? io::Format::json : io::Format::csv; }

void cmd_pn(const Options& o, std::ostream& out) {
  PartitionCache cache;
  const auto& p = partition_count(cache, o.n);
  if (o.format == "json") {
    out << "{\"n\": " << o.n << ", \"p\": \"" << p.get_str() << "\"}\n";
  } else {
    out << p.get_str() << '\n';
  }
}

void cmd_vd(const Options& o, std::ostream& out) {
  std::vector<mpz_class> values;
  if (o.method == "andrews" || o.method == "product") {
    const auto s = o.method == "andrews" ? vd_andrews(o.max) : vd_product(o.max);
    values.assign(s.coeffs().begin(), s.coeffs().end());
  } else {
    PartitionCache cache;
    cache.ensure(o.max);
    for (std::int64_t n = 0; n <= o.max; ++n) values.push_back(vd_fast(n, cache));
  }
  io::write_vd(out, values, parse_format(o.format));
}

void cmd_rank_table(const Options& o, std::ostream& out) {
  RankTable table;
  if (o.method == "oracle") {
    table = rank_table_oracle(o.max);
  } else if (o.method == "genfunc") {
    table = vdm_genfunc(o.max);
  } else {
    PartitionCache cache;
    table = rank_table_prop1(o.max, cache);
  }
  io::write_rank_table(out, table, parse_format(o.format));
}

void cmd_asym(const Options& o, std::ostream& out) {
  if (o.n < 1) throw std::invalid_argument("asym: --n must be positive");
  PartitionCache cache;
  const auto exact = vdm_prop1(o.ell, o.n, cache);
  const auto row = theorem1_error(o.ell, o.n, cache);
  if (o.asym_format == "text") {
    const std::int64_t a = o.ell < 0 ? -o.ell : o.ell;
    out << "N=" << o.n << " ell=" << o.ell << " weight=" << o.n + a * (a + 1) / 2
        << " exact=" << exact.get_str()
        << " estimate=" << format_log_scaled(LogScaled::from_log(row.estimate_log))
        << " rel_err=" << io::format_real(row.rel_err) << '\n';
  } else {
    io::write_errors(out, std::span(&row, 1), parse_format(o.asym_format));
  }
}

void cmd_dist(const Options& o, std::ostream& out) {
  PartitionCache cache;
  const auto grid = uniform_grid(-4.0, 4.0, o.grid_step);
  io::write_distribution(out, empirical_rank_cdf(o.n, grid, cache), parse_format(o.format));
}

int cmd_verify(const Options& o, std::ostream& out) {
  static const std::map<std::string, verify::Suite> suites{
      {"characters", verify::Suite::characters}, {"identities", verify::Suite::identities},
      {"oracle", verify::Suite::oracle},         {"asymptotic", verify::Suite::asymptotic},
      {"distribution", verify::Suite::distribution}, {"all", verify::Suite::all}};
  PartitionCache cache;
  const auto results = verify::run_suite(suites.at(o.suite), o.verify_max, cache);
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    ok = ok && r.passed;
  }
  out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts and asymptotics for the rank of strongly concave compositions", "scc"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&o](CLI::App* sub, bool text_format = false) {
    sub->add_option("--out", o.out_path, "Write output to PATH instead of stdout");
    if (text_format) {
      sub->add_option("--format", o.asym_format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    } else {
      sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    }
  };

  auto* pn = app.add_subcommand("pn", "Exact partition number p(N)");
  pn->add_option("--n", o.n, "N")->required();
  add_io(pn);

  auto* vd = app.add_subcommand("vd", "V_d(n) for n = 0..max as CSV n,vd");
  vd->add_option("--max", o.max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  vd->add_option("--method", o.method, "andrews | product | fast")
      ->check(CLI::IsMember({"andrews", "product", "fast"}))
      ->default_str("fast");
  add_io(vd);

  auto* rt = app.add_subcommand("rank-table", "V_d(m,n) for n = 0..max as CSV n,m,count");
  rt->add_option("--max", o.max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  rt->add_option("--method", o.method, "genfunc | prop1 | oracle")
      ->check(CLI::IsMember({"genfunc", "prop1", "oracle"}))
      ->default_str("prop1");
  add_io(rt);

  auto* asym = app.add_subcommand("asym", "Compare V_d(ell, N + |ell|(|ell|+1)/2) with p(N) F(alpha)");
  asym->add_option("--n", o.n, "N")->required();
  asym->add_option("--ell", o.ell, "ell")->required();
  add_io(asym, true);

  auto* dist = app.add_subcommand("dist", "Empirical rank distribution against the normal CDF");
  dist->add_option("--n", o.n, "N")->required();
  dist->add_option("--grid-step", o.grid_step, "Grid step on [-4, 4]")->check(CLI::PositiveNumber);
  add_io(dist);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"characters", "identities", "oracle", "asymptotic", "distribution", "all"}));
  ver->add_option("--max", o.verify_max, "Size parameter for the suite")->check(CLI::NonNegativeNumber);
  add_io(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return kExitUsage;
  }

  if (o.method.empty()) o.method = vd->parsed() ? "fast" : "prop1";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return kExitVerifyFailed;
    }
    sink = &file;
  }

  int code = kExitOk;
  try {
    if (pn->parsed()) cmd_pn(o, *sink);
    if (vd->parsed()) cmd_vd(o, *sink);
    if (rt->parsed()) cmd_rank_table(o, *sink);
    if (asym->parsed()) cmd_asym(o, *sink);
    if (dist->parsed()) cmd_dist(o, *sink);
    if (ver->parsed()) code = cmd_verify(o, *sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  sink->flush();
  if (!*sink) {
    err << "error: write failed\n";
    return kExitVerifyFailed;
  }
  return code;
}

}  // namespace scc::cli
