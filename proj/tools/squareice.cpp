// Command line surface: enumeration tables with cross-checked closed forms,
// verification suites, and partition function evaluation.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "squareice/asm_grid.hpp"
#include "squareice/closedform.hpp"
#include "squareice/numerics.hpp"
#include "squareice/oracle.hpp"
#include "squareice/orthopoly.hpp"
#include "squareice/verification.hpp"

namespace {

using nlohmann::json;
using namespace squareice;

struct ResultRow {
  std::string name;
  std::string expected;  // empty = informational
  std::string got;
  bool informational = false;
  bool pass = true;
};

struct Report {
  std::string command;
  json params;
  std::vector<ResultRow> rows;
  double elapsed_ms = 0;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.informational && !r.pass) return false;
    return true;
  }
};

std::string verdict(const ResultRow& r) {
  if (r.informational) return "INFO";
  return r.pass ? "MATCH" : "MISMATCH";
}

void emit(const Report& report, const std::string& format) {
  if (format == "json") {
    json out;
    out["command"] = report.command;
    out["params"] = report.params;
    out["results"] = json::array();
    for (const auto& r : report.rows) {
      json row;
      row["name"] = r.name;
      if (!r.expected.empty()) row["expected"] = r.expected;
      row["got"] = r.got;
      row["verdict"] = verdict(r);
      out["results"].push_back(std::move(row));
    }
    out["elapsed_ms"] = report.elapsed_ms;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "name,expected,got,verdict\n";
    for (const auto& r : report.rows) {
      const auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
      };
      std::cout << quote(r.name) << ',' << quote(r.expected) << ',' << quote(r.got) << ',' << verdict(r)
                << "\n";
    }
  } else {
    for (const auto& r : report.rows) {
      std::cout << (r.informational ? "  " : (r.pass ? "  " : "! ")) << r.name << ": " << r.got;
      if (!r.expected.empty() && !r.informational) std::cout << " [expected " << r.expected << "] " << verdict(r);
      std::cout << "\n";
    }
    std::cout << (report.pass() ? "PASS" : "FAIL") << " (" << report.elapsed_ms << " ms)\n";
  }
}

template <class T>
std::string vec_str(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

unsigned env_digits() {
  if (const char* s = std::getenv("SQUAREICE_DIGITS")) {
    const long v = std::strtol(s, nullptr, 10);
    if (v >= 10 && v <= 10000) return static_cast<unsigned>(v);
  }
  return kDefaultDigits;
}

int run_count(int n, const std::string& x_text, const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  const Rational x = parse_rational(x_text);
  Report report;
  report.command = "count";
  report.params = {{"n", n}, {"x", x.str()}};

  const Rational total = oracle::weighted_count(n, x);
  if (x == 1) {
    report.rows.push_back({"total", closedform::total_count(n).str(), total.str()});
    report.rows.back().pass = Rational(closedform::total_count(n)) == total;
  } else {
    report.rows.push_back({"weighted total", "", total.str(), true});
  }

  const auto refined = oracle::refined_counts(n, x);
  report.rows.push_back({"refined counts (by last-column row)", "", vec_str(refined), true});

  const auto table = oracle::correlators(n, x);
  report.rows.push_back({"one-point correlator", "", vec_str(table.one_point), true});

  // Closed forms exist at x = 1 and x = 3; the enumeration is the referee.
  if ((x == 1 || x == 3) && n >= (x == 3 ? 2 : 1)) {
    const auto closed = x == 1 ? closedform::one_point_x1(n) : closedform::one_point_x3(n);
    ResultRow row{"one-point closed form", vec_str(closed), vec_str(table.one_point)};
    row.pass = closed == table.one_point;
    report.rows.push_back(row);
  }

  if (n >= 2) {
    const auto small = oracle::correlators(n - 1, x);
    const auto composed = closedform::two_point_from_one(table.one_point, small.one_point);
    bool same = true;
    std::ostringstream grid;
    for (int r1 = 0; r1 < n; ++r1) {
      grid << (r1 ? " ; " : "");
      for (int r2 = 0; r2 < n; ++r2) {
        same = same && composed(r1, r2) == table.two_point(r1, r2);
        grid << (r2 ? "," : "") << table.two_point(r1, r2);
      }
    }
    report.rows.push_back({"two-point correlator", "", grid.str(), true});
    ResultRow row{"two-point from one-point composition", "exact match", same ? "exact match" : "mismatch"};
    row.pass = same;
    report.rows.push_back(row);
  }

  const auto doubly = oracle::doubly_refined_counts(n, x);
  std::ostringstream grid;
  for (int r = 0; r < n; ++r) {
    grid << (r ? " ; " : "");
    for (int c = 0; c < n; ++c) grid << (c ? "," : "") << doubly(r, c);
  }
  report.rows.push_back({"doubly refined counts (first/last column rows)", "", grid.str(), true});

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, format);
  return report.pass() ? 0 : 1;
}

int run_verify(const std::vector<std::string>& suites, const verification::Options& opt,
               const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.command = "verify";
  report.params = {{"suites", suites}, {"digits", opt.digits}, {"seed", opt.seed}, {"tuples", opt.tuples}};
  if (opt.max_n > 0) report.params["max_n"] = opt.max_n;

  for (const auto& name : suites) {
    const auto suite = verification::run_suite(name, opt);
    for (const auto& c : suite.checks) {
      ResultRow row{name + ": " + c.name, c.expected, c.got};
      row.pass = c.pass;
      report.rows.push_back(row);
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, format);
  return report.pass() ? 0 : 1;
}

int run_partition(bool ice, int n, const std::string& lambda, const std::string& eta, unsigned digits,
                  const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.command = "partition";
  report.params = {{"n", n}, {"digits", digits}};

  const PrecisionGuard guard(digits + numerics::kGuardDigits);
  if (ice) {
    report.params["point"] = "ice";
    const auto z = orthopoly::ice_partition(n);
    std::ostringstream exact_form;
    exact_form << "(sqrt(3)/2)^" << n * n << " * " << z.rational_factor.str();
    report.rows.push_back({"partition function (exact form)", "", exact_form.str(), true});
    report.rows.push_back({"partition function (value)", "", to_decimal_string(z.numeric(), digits), true});
    report.rows.push_back({"integer factor", "", z.rational_factor.str(), true});
    report.rows.push_back({"delta", "", "1/2", true});
  } else {
    const auto params = numerics::params_from_strings(lambda, eta, digits);
    report.params["lambda"] = lambda;
    report.params["eta"] = eta;
    const auto z = numerics::partition_hankel(n, params);
    report.rows.push_back({"partition function", "", to_decimal_string(z.value, digits), true});
    report.rows.push_back({"pivot ratio", "", to_decimal_string(z.pivot_ratio, 3), true});
    const Real a = sin(params.lambda + params.eta), b = sin(params.lambda - params.eta),
               c = sin(2 * params.eta);
    report.rows.push_back({"delta", "", to_decimal_string(numerics::vertex_delta(a, b, c), digits), true});
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, format);
  return report.pass() ? 0 : 1;
}

int run_asm(const std::string& file, bool as_json, bool show_grid, const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  Report report;
  report.command = "asm";
  report.params = {{"file", file}};

  try {
    const Asm a = as_json ? asm_from_json(buffer.str()) : asm_from_text(buffer.str());
    const auto s = stats(a);
    report.rows.push_back({"valid", "", "yes", true});
    report.rows.push_back({"size", "", std::to_string(a.size()), true});
    report.rows.push_back({"minus ones", "", std::to_string(s.minus_ones), true});
    report.rows.push_back(
        {"top-row 1, position from right", "", std::to_string(s.top_row_col_from_right), true});
    report.rows.push_back(
        {"bottom-row 1, position from right", "", std::to_string(s.bottom_row_col_from_right), true});
    report.rows.push_back({"first-column 1, row", "", std::to_string(s.first_col_row), true});
    report.rows.push_back({"last-column 1, row", "", std::to_string(s.last_col_row), true});
    if (show_grid) {
      const auto g = to_vertex_grid(a);
      std::ostringstream types;
      for (int i = 0; i < g.n; ++i) {
        types << (i ? " ; " : "");
        for (int j = 0; j < g.n; ++j) types << (j ? "," : "") << g.type(i, j);
      }
      report.rows.push_back({"vertex types", "", types.str(), true});
      std::ostringstream counts;
      for (int t = 0; t < 6; ++t) counts << (t ? "," : "") << g.counts[t];
      report.rows.push_back({"type counts", "", counts.str(), true});
    }
  } catch (const std::exception& e) {
    ResultRow row{"valid", "yes", std::string("no: ") + e.what()};
    row.pass = false;
    report.rows.push_back(row);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(report, format);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and high-precision tools for square ice with domain wall boundaries "
               "and alternating sign matrix enumeration"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  // count
  auto* count = app.add_subcommand("count", "Enumeration tables with closed-form cross-checks");
  count->fallthrough();
  int count_n = 4;
  std::string count_x = "1";
  count->add_option("--n", count_n, "Matrix size")->required()->check(CLI::Range(1, 7));
  count->add_option("--x", count_x, "Weight per -1 entry, as p or p/q");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->fallthrough();
  std::string suite = "all";
  verification::Options opt;
  opt.digits = env_digits();
  int max_n = 0;
  std::vector<std::string> q_texts, x_texts;
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--max-n", max_n, "Override the largest size");
  verify->add_option("--n", max_n, "Alias for --max-n");
  verify->add_option("--digits", opt.digits, "Working precision (decimal digits)");
  verify->add_option("--seed", opt.seed, "Seed for random rational tuples");
  verify->add_option("--tuples", opt.tuples, "Random tuples per determinant comparison");
  verify->add_option("--q", q_texts, "Crossing parameter values, as p or p/q");
  verify->add_option("--x", x_texts, "Weight values, as p or p/q");

  // partition
  auto* partition = app.add_subcommand("partition", "Partition function");
  partition->fallthrough();
  bool ice = false;
  int part_n = 2;
  std::string lambda, eta;
  unsigned part_digits = env_digits();
  partition->add_flag("--ice", ice, "All weights equal (exact evaluation)");
  partition->add_option("--n", part_n, "Lattice size")->required()->check(CLI::Range(1, 64));
  partition->add_option("--lambda", lambda, "Spectral parameter (radians)");
  partition->add_option("--eta", eta, "Crossing parameter (radians)");
  partition->add_option("--digits", part_digits, "Working precision (decimal digits)");

  // asm
  auto* asm_cmd = app.add_subcommand("asm", "Validate and describe a matrix file");
  asm_cmd->fallthrough();
  std::string asm_file;
  bool asm_json = false, asm_grid_flag = false;
  asm_cmd->add_option("file", asm_file, "Matrix file (rows of -1/0/1)")->required();
  asm_cmd->add_flag("--json", asm_json, "Input is a JSON array of arrays");
  asm_cmd->add_flag("--grid", asm_grid_flag, "Print the vertex-type grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count) return run_count(count_n, count_x, format);
    if (*verify) {
      opt.max_n = max_n;
      for (const auto& text : q_texts) opt.q_values.push_back(parse_rational(text));
      for (const auto& text : x_texts) opt.x_values.push_back(parse_rational(text));
      std::vector<std::string> names;
      if (suite == "all")
        names = verification::suite_names();
      else
        names.push_back(suite);
      return run_verify(names, opt, format);
    }
    if (*partition) {
      if (!ice && (lambda.empty() || eta.empty())) {
        std::cerr << "partition: need --ice or both --lambda and --eta\n";
        return 2;
      }
      if (!ice && part_n > numerics::kMaxSize) {
        std::cerr << "partition: numeric pipeline is capped at n = " << numerics::kMaxSize << "\n";
        return 2;
      }
      return run_partition(ice, part_n, lambda, eta, part_digits, format);
    }
    if (*asm_cmd) return run_asm(asm_file, asm_json, asm_grid_flag, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
