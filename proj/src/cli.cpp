#include "lonesum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"

#include "lonesum/bitmatrix.hpp"
#include "lonesum/classify.hpp"
#include "lonesum/count.hpp"
#include "lonesum/json_io.hpp"
#include "lonesum/oracle.hpp"
#include "lonesum/series.hpp"
#include "lonesum/verify.hpp"

namespace lonesum::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kMaxPrime = 10000;

struct Options {
  std::string input = "-";
  bool pretty = false;

  std::size_t m = 0;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  bool total = false;
  bool lonesum = false;
  bool tilde_lonesum = false;

  std::string what = "d";
  std::size_t max = 5;
  std::string format = "tsv";

  std::vector<std::string> suites;
  std::vector<std::uint64_t> primes;
  bool nightly = false;

  std::size_t order = kDefaultSeriesOrder;
  std::optional<std::size_t> max_sum;

  std::size_t max_cells = kDefaultEnumerationCells;
  unsigned threads = 0;
  bool timing = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

int do_classify(const Options& o, std::istream& in, std::ostream& out) {
  const BitMatrix a = parse_matrix(read_input(o.input, in));
  out << dump(classification_json(a, classify(a)), o.pretty) << '\n';
  return 0;
}

int do_decompose(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const BitMatrix a = parse_matrix(read_input(o.input, in));
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  try {
    const Decomposition d = decompose(a);
    j["decomposable"] = true;
    j["decomposition"] = to_json(d);
    out << dump(j, o.pretty) << '\n';
    return 0;
  } catch (const NotDecomposableError& e) {
    j["decomposable"] = false;
    j["witness"] = to_json(e.witness());
    out << dump(j, o.pretty) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int do_count(const Options& o, std::ostream& out) {
  const int selected = (o.k ? 1 : 0) + o.total + o.lonesum + o.tilde_lonesum;
  if (selected != 1) {
    throw CLI::ValidationError("count", "exactly one of --k, --total, --lonesum, --tilde-lonesum");
  }
  BigInt value;
  if (o.k) {
    value = d_k(*o.k, o.m, o.n);
  } else if (o.total) {
    value = d_total(o.m, o.n);
  } else if (o.lonesum) {
    value = lonesum_count(o.m, o.n);
  } else {
    value = tilde_lonesum_count(o.m, o.n);
  }
  out << value.get_str() << '\n';
  return 0;
}

BigInt table_entry(const Options& o, std::size_t m, std::size_t n) {
  if (o.what == "d1") return d_k(1, m, n);
  if (o.what == "d2") return d_k(2, m, n);
  if (o.what == "d") return d_total(m, n);
  if (o.what == "l") return lonesum_count(m, n);
  return d_k(*o.k, m, n);  // "dk"
}

int do_table(const Options& o, std::ostream& out) {
  if (o.what == "dk" && !o.k) throw CLI::ValidationError("table", "--what dk needs --k");
  if (o.format == "json") {
    Json j;
    j["what"] = o.what;
    if (o.what == "dk") j["k"] = *o.k;
    j["max"] = o.max;
    Json rows = Json::array();
    for (std::size_t m = 0; m <= o.max; ++m) {
      Json row = Json::array();
      for (std::size_t n = 0; n <= o.max; ++n) row.push_back(table_entry(o, m, n).get_str());
      rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    out << dump(j, o.pretty) << '\n';
    return 0;
  }
  out << "m\\n";
  for (std::size_t n = 0; n <= o.max; ++n) out << '\t' << n;
  out << '\n';
  for (std::size_t m = 0; m <= o.max; ++m) {
    out << m;
    for (std::size_t n = 0; n <= o.max; ++n) out << '\t' << table_entry(o, m, n).get_str();
    out << '\n';
  }
  return 0;
}

int do_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  if (!o.primes.empty()) vo.primes = o.primes;
  vo.series_order = o.order;
  vo.series_max_sum = std::min(vo.series_max_sum, o.order);
  vo.threads = o.threads;
  if (o.nightly) vo.oracle_cells = 25;
  std::vector<std::string> names = o.suites;
  if (std::find(names.begin(), names.end(), "all") != names.end()) names = suite_names();
  bool ok = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, vo);
    out << render(r);
    ok = ok && r.passed();
  }
  return ok ? 0 : kExitFailure;
}

int do_egf_check(const Options& o, std::ostream& out) {
  const std::size_t max_sum = o.max_sum.value_or(std::min<std::size_t>(10, o.order));
  bool ok = true;
  out << "kind\tm\tn\tformula\tseries\tstatus\n";
  for (const auto& c : series_comparisons(o.order, max_sum)) {
    out << c.kind << '\t' << c.m << '\t' << c.n << '\t' << c.formula.get_str() << '\t'
        << c.series.get_str() << '\t' << (c.ok() ? "ok" : "MISMATCH") << '\n';
    ok = ok && c.ok();
  }
  return ok ? 0 : kExitFailure;
}

int do_oracle(const Options& o, std::ostream& out) {
  EnumerateOptions eo;
  eo.max_cells = o.max_cells;
  eo.threads = o.threads;
  out << dump(to_json(enumerate(o.m, o.n, eo), o.timing), o.pretty) << '\n';
  return 0;
}

void add_shape(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "Number of rows")->required();
  sub->add_option("--n", o.n, "Number of columns")->required();
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lonesum and lonesum-decomposable (0,1)-matrices", "lonesum"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a matrix (JSON)");
  auto* decompose_cmd = app.add_subcommand("decompose", "Ferrers-block decomposition (JSON)");
  for (auto* sub : {classify_cmd, decompose_cmd}) {
    sub->add_option("--input,-i", o.input, "Matrix file, '-' for stdin");
    sub->add_flag("--pretty", o.pretty, "Indented JSON");
  }

  auto* count_cmd = app.add_subcommand("count", "Print one count");
  add_shape(count_cmd, o);
  count_cmd->add_option("--k", o.k, "Decomposition order: print D_k(m,n)");
  count_cmd->add_flag("--total", o.total, "Print D(m,n)");
  count_cmd->add_flag("--lonesum", o.lonesum, "Print L(m,n)");
  count_cmd->add_flag("--tilde-lonesum", o.tilde_lonesum, "Lonesum without zero rows or columns");

  auto* table_cmd = app.add_subcommand("table", "Print a table for 0 <= m, n <= max");
  table_cmd->add_option("--what", o.what, "d1, d2, d, l or dk")
      ->check(CLI::IsMember({"d1", "d2", "d", "l", "dk"}));
  table_cmd->add_option("--k", o.k, "Order for --what dk");
  table_cmd->add_option("--max", o.max, "Largest m and n")->check(CLI::Range(0, 60));
  table_cmd->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  table_cmd->add_flag("--pretty", o.pretty, "Indented JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", o.suites, "Suite name(s), or all")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--primes", o.primes, "Primes for the congruence suite")
      ->check(CLI::Range(std::uint64_t{2}, kMaxPrime));
  verify_cmd->add_option("--order", o.order, "Series truncation order")
      ->envname("LONESUM_ORDER")
      ->check(CLI::Range(1, 40));
  verify_cmd->add_flag("--nightly", o.nightly, "Oracle suite up to 25 cells")
      ->envname("LONESUM_NIGHTLY");
  verify_cmd->add_option("--threads", o.threads, "Enumeration threads (0: all cores)");

  auto* egf_cmd = app.add_subcommand("egf-check", "Series coefficients vs closed forms (TSV)");
  egf_cmd->add_option("--order", o.order, "Series truncation order")
      ->envname("LONESUM_ORDER")
      ->check(CLI::Range(1, 40));
  egf_cmd->add_option("--max-sum", o.max_sum, "Largest m + n compared (default min(10, order))");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive enumeration report (JSON)");
  add_shape(oracle_cmd, o);
  oracle_cmd->add_option("--max-cells", o.max_cells, "Enumeration guard on m * n")
      ->envname("LONESUM_MAX_CELLS")
      ->check(CLI::Range(0, 62));
  oracle_cmd->add_option("--threads", o.threads, "Enumeration threads (0: all cores)");
  oracle_cmd->add_flag("--timing", o.timing, "Include elapsed_seconds");
  oracle_cmd->add_flag("--pretty", o.pretty, "Indented JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    for (std::uint64_t p : o.primes) {
      if (!is_prime(p)) throw CLI::ValidationError("--primes", std::to_string(p) + " is not prime");
    }
    if (*classify_cmd) return do_classify(o, in, out);
    if (*decompose_cmd) return do_decompose(o, in, out, err);
    if (*count_cmd) return do_count(o, out);
    if (*table_cmd) return do_table(o, out);
    if (*verify_cmd) return do_verify(o, out);
    if (*egf_cmd) return do_egf_check(o, out);
    if (*oracle_cmd) return do_oracle(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lonesum::cli
