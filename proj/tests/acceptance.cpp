// Acceptance run: one PASS/FAIL line per criterion, with detail lines for
// warnings and failures. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "lonesum/count.hpp"
#include "lonesum/verify.hpp"

using namespace lonesum;

namespace {

// Runtime limits, in seconds.
constexpr double kTablesLimit = 1.0;
constexpr double kOracleSmallLimit = 60.0;   // m * n <= 20
constexpr double kOracleLargeLimit = 300.0;  // m * n <= 25
constexpr double kSeriesLimit = 10.0;        // series at truncation order 12

constexpr std::size_t kSeriesOrder = 12;
constexpr std::size_t kSeriesMaxSum = 10;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
auto timed(double& seconds, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto result = fn();
  seconds = seconds_since(start);
  return result;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

class Report {
 public:
  void criterion(int number, const std::string& title, bool ok, const std::string& detail,
                 const std::vector<const SuiteResult*>& suites = {}) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
              << detail << ")\n";
    for (const auto* s : suites) {
      for (const auto& line : s->lines()) {
        if (line.status == Status::Pass) continue;
        std::cout << "    " << to_string(line.status) << " [" << s->name() << "] " << line.text
                  << '\n';
      }
    }
    failures_ += ok ? 0 : 1;
  }

  int failures() const noexcept { return failures_; }

 private:
  int failures_ = 0;
};

std::string summary(const SuiteResult& r) {
  return std::to_string(r.lines().size()) + " lines, " + std::to_string(r.count(Status::Fail)) +
         " failed, " + std::to_string(r.count(Status::Warn)) + " warned";
}

}  // namespace

int main() {
  Report report;
  VerifyOptions options;

  {
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_tables(options); });
    const bool warned = r.count(Status::Warn) == 1 && d_total(5, 4) == 90946 &&
                        d_total(4, 5) == 90946;
    report.criterion(1, "D_1, D_2 and D tables for 0 <= m,n <= 5", r.passed() && warned && t < kTablesLimit,
                     summary(r) + ", " + format_seconds(t) + ", limit " + format_seconds(kTablesLimit),
                     {&r});
  }

  {
    VerifyOptions small = options;
    small.oracle_cells = 20;
    VerifyOptions large = options;
    large.oracle_cells = 25;
    double t_small = 0;
    double t_large = 0;
    const SuiteResult rs = timed(t_small, [&] { return verify_oracle(small); });
    const SuiteResult rl = timed(t_large, [&] { return verify_oracle(large); });
    const bool ok = rs.passed() && rl.passed() && t_small <= kOracleSmallLimit &&
                    t_large <= kOracleLargeLimit;
    report.criterion(2, "enumeration equals closed forms for m*n <= 20 and m*n <= 25", ok,
                     "mn<=20: " + summary(rs) + ", " + format_seconds(t_small) + "; mn<=25: " +
                         summary(rl) + ", " + format_seconds(t_large),
                     {&rl});
  }

  {
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_forbidden_patterns(options); });
    report.criterion(3, "component classification equals forbidden-pattern scan, m*n <= 16",
                     r.passed(), summary(r) + ", " + format_seconds(t), {&r});
  }

  {
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_complement_trichotomy(options); });
    report.criterion(4, "matrix/complement trichotomy, m*n <= 16", r.passed(),
                     summary(r) + ", " + format_seconds(t), {&r});
  }

  {
    VerifyOptions o = options;
    o.series_order = kSeriesOrder;
    o.series_max_sum = kSeriesMaxSum;
    double t_series = 0;
    const auto rows = timed(t_series, [&] { return series_comparisons(kSeriesOrder, kSeriesMaxSum); });
    bool integral = true;
    for (const auto& c : rows) integral = integral && c.series.get_den() == 1;
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_series(o); });
    report.criterion(5, "generating-function coefficients, m+n <= 10, order 12",
                     r.passed() && integral && t_series < kSeriesLimit,
                     std::to_string(rows.size()) + " comparisons, all integral: " +
                         (integral ? "yes" : "no") + ", series " + format_seconds(t_series) +
                         " (limit " + format_seconds(kSeriesLimit) + "), suite " + summary(r) +
                         ", " + format_seconds(t),
                     {&r});
  }

  {
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_congruences(options); });
    report.criterion(6, "prime congruences and Stirling congruences, p <= 13, k <= 8, m,n <= 3p",
                     r.passed(), summary(r) + ", " + format_seconds(t), {&r});
  }

  {
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_recurrence(options); });
    report.criterion(7, "order-k recurrence, k <= 6, m,n <= 10", r.passed(),
                     summary(r) + ", " + format_seconds(t), {&r});
  }

  {
    double t = 0;
    const auto both = timed(t, [&] {
      return std::make_pair(verify_star_identity(options), verify_cycle_identity(options));
    });
    report.criterion(8, "poly-Bernoulli identities, k <= 3, m,n <= 6; cycle routes l,m <= 6, n <= 4",
                     both.first.passed() && both.second.passed(),
                     summary(both.first) + "; " + summary(both.second) + ", " + format_seconds(t),
                     {&both.first, &both.second});
  }

  {
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_orientations(options); });
    report.criterion(9, "acyclic orientations of K_{m,n} equal L(m,n), m*n <= 16", r.passed(),
                     summary(r) + ", " + format_seconds(t), {&r});
  }

  {
    double t = 0;
    const SuiteResult r = timed(t, [&] { return verify_margins(options); });
    report.criterion(10, "lonesum iff margins unique, m*n <= 16", r.passed(),
                     summary(r) + ", " + format_seconds(t), {&r});
  }

  std::cout << (report.failures() == 0 ? "ALL CRITERIA PASSED" : std::to_string(report.failures()) +
                                                                     " CRITERIA FAILED")
            << '\n';
  return report.failures() == 0 ? 0 : 1;
}
