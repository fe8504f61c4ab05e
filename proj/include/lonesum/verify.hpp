#ifndef LONESUM_VERIFY_HPP
#define LONESUM_VERIFY_HPP

// Named verification suites shared by the CLI `verify` subcommand and the
// test binaries. Each suite compares two independent computations and
// reports one line per check group plus one line per counterexample.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lonesum/series.hpp"

namespace lonesum {

enum class Status { Pass, Warn, Fail };

std::string_view to_string(Status s);

struct SuiteLine {
  Status status;
  std::string text;
};

class SuiteResult {
 public:
  explicit SuiteResult(std::string name) : name_(std::move(name)) {}

  void pass(std::string text) { add(Status::Pass, std::move(text)); }
  void warn(std::string text) { add(Status::Warn, std::move(text)); }
  void fail(std::string text) { add(Status::Fail, std::move(text)); }
  void add(Status s, std::string text) { lines_.push_back({s, std::move(text)}); }
  void check(bool ok, std::string text) { add(ok ? Status::Pass : Status::Fail, std::move(text)); }

  const std::string& name() const noexcept { return name_; }
  const std::vector<SuiteLine>& lines() const noexcept { return lines_; }
  std::size_t count(Status s) const noexcept;
  bool passed() const noexcept { return count(Status::Fail) == 0; }

 private:
  std::string name_;
  std::vector<SuiteLine> lines_;
};

/// "STATUS [suite] text" per line.
std::string render(const SuiteResult& r);

struct VerifyOptions {
  std::size_t table_max = 5;
  std::size_t oracle_cells = 20;
  std::size_t pattern_cells = 16;  // thm1, thm2, orientations, margins
  std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
  std::size_t congruence_k_max = 8;
  std::size_t congruence_range_factor = 3;  // 1 <= m, n <= factor * p
  std::size_t recurrence_k_max = 6;
  std::size_t recurrence_mn_max = 10;
  std::size_t identity_k_max = 3;
  std::size_t identity_mn_max = 6;
  std::size_t cycle_lm_max = 6;
  std::size_t cycle_n_max = 4;
  std::size_t series_order = 12;
  std::size_t series_max_sum = 10;
  std::size_t series_oracle_cells = 25;  // tilde L checked by enumeration up to here
  unsigned threads = 0;
  std::size_t max_reported = 10;  // counterexample lines per check group
};

/// tables, oracle, thm1, thm2, congruence, recurrence, prop6, eq16,
/// orientations, margins, egf.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

SuiteResult verify_tables(const VerifyOptions& options = {});
SuiteResult verify_oracle(const VerifyOptions& options = {});
SuiteResult verify_forbidden_patterns(const VerifyOptions& options = {});
SuiteResult verify_complement_trichotomy(const VerifyOptions& options = {});
SuiteResult verify_congruences(const VerifyOptions& options = {});
SuiteResult verify_recurrence(const VerifyOptions& options = {});
SuiteResult verify_star_identity(const VerifyOptions& options = {});
SuiteResult verify_cycle_identity(const VerifyOptions& options = {});
SuiteResult verify_orientations(const VerifyOptions& options = {});
SuiteResult verify_margins(const VerifyOptions& options = {});
SuiteResult verify_series(const VerifyOptions& options = {});

/// One formula-vs-series comparison for the egf-check grid.
struct SeriesComparison {
  std::string kind;  // "d_k=<k>", "d", "l", "tilde_l"
  std::size_t m = 0;
  std::size_t n = 0;
  BigInt formula;
  Rational series;
  bool ok() const { return series.get_den() == 1 && series == formula; }
};

/// All comparisons with m + n <= max_sum, using series truncated at order.
/// Kinds: d_k for 0 <= k <= min(m, n), d, l and tilde_l (against binomial
/// inversion of the closed form).
std::vector<SeriesComparison> series_comparisons(std::size_t order, std::size_t max_sum);

}  // namespace lonesum

#endif  // LONESUM_VERIFY_HPP
