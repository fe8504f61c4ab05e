#include "lonesum/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <thread>

#include "lonesum/classify.hpp"

namespace lonesum {

namespace {

using Word = BitMatrix::Word;

void guard(std::size_t m, std::size_t n, std::size_t limit) {
  if (m * n > limit) throw ShapeGuardError(m, n, limit);
}

struct Tally {
  std::uint64_t lonesum = 0;
  std::uint64_t tilde_lonesum = 0;
  std::vector<std::uint64_t> d;
  std::vector<std::uint64_t> tilde_d;
};

void tally_range(std::size_t m, std::size_t n, std::uint64_t begin, std::uint64_t end,
                 Tally& t) {
  const Word row_mask = n == 64 ? ~Word{0} : ((Word{1} << n) - 1);
  std::array<Word, 64> rows{};
  const std::span<const Word> view(rows.data(), m);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    Word seen_cols = 0;
    bool zero_row = false;
    for (std::size_t i = 0; i < m; ++i) {
      rows[i] = (mask >> (i * n)) & row_mask;
      seen_cols |= rows[i];
      zero_row |= rows[i] == 0;
    }
    const int order = decomposition_order_rows(view);
    if (order < 0) continue;
    const bool tilde = !zero_row && seen_cols == row_mask;
    ++t.d[static_cast<std::size_t>(order)];
    if (tilde) ++t.tilde_d[static_cast<std::size_t>(order)];
    if (order <= 1) {
      ++t.lonesum;
      if (tilde) ++t.tilde_lonesum;
    }
  }
}

// Gale-Ryser: some (0,1)-matrix has row sums `rows` and column sums `cols`.
bool feasible(std::vector<std::size_t> rows, const std::vector<std::size_t>& cols) {
  std::size_t row_total = 0;
  for (const auto r : rows) row_total += r;
  std::size_t col_total = 0;
  for (const auto c : cols) col_total += c;
  if (row_total != col_total) return false;
  std::sort(rows.begin(), rows.end(), std::greater<>());
  std::size_t prefix = 0;
  for (std::size_t k = 1; k <= rows.size(); ++k) {
    prefix += rows[k - 1];
    std::size_t bound = 0;
    for (const auto c : cols) bound += std::min(c, k);
    if (prefix > bound) return false;
  }
  return true;
}

class MarginCounter {
 public:
  MarginCounter(std::span<const std::size_t> rows) : rows_(rows.begin(), rows.end()) {}

  BigInt count(std::size_t i, std::vector<std::size_t> caps) {
    std::sort(caps.begin(), caps.end(), std::greater<>());
    if (i == rows_.size()) {
      return std::all_of(caps.begin(), caps.end(), [](std::size_t c) { return c == 0; }) ? 1 : 0;
    }
    if (!feasible({rows_.begin() + static_cast<std::ptrdiff_t>(i), rows_.end()}, caps)) return 0;
    auto key = std::make_pair(i, caps);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Columns with equal remaining capacity are interchangeable: choose how
    // many ones go into each capacity group.
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // (capacity, size)
    for (const auto c : caps) {
      if (c == 0) continue;
      if (!groups.empty() && groups.back().first == c) {
        ++groups.back().second;
      } else {
        groups.emplace_back(c, 1);
      }
    }
    BigInt total = 0;
    std::vector<std::size_t> take(groups.size(), 0);
    distribute(i, caps, groups, take, 0, rows_[i], BigInt(1), total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  void distribute(std::size_t i, const std::vector<std::size_t>& caps,
                  const std::vector<std::pair<std::size_t, std::size_t>>& groups,
                  std::vector<std::size_t>& take, std::size_t g, std::size_t left,
                  const BigInt& ways, BigInt& total) {
    if (g == groups.size()) {
      if (left != 0) return;
      std::vector<std::size_t> next;
      next.reserve(caps.size());
      for (std::size_t h = 0; h < groups.size(); ++h) {
        for (std::size_t s = 0; s < groups[h].second; ++s) {
          next.push_back(groups[h].first - (s < take[h] ? 1 : 0));
        }
      }
      for (const auto c : caps) {
        if (c == 0) next.push_back(0);
      }
      total += ways * count(i + 1, std::move(next));
      return;
    }
    const std::size_t most = std::min(left, groups[g].second);
    for (std::size_t t = 0; t <= most; ++t) {
      take[g] = t;
      distribute(i, caps, groups, take, g + 1, left - t, ways * binomial(groups[g].second, t),
                 total);
    }
    take[g] = 0;
  }

  std::vector<std::size_t> rows_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, BigInt> memo_;
};

bool has_forbidden_pattern(const BitMatrix& a) {
  for (const auto& p : forbidden_set()) {
    if (contains_pattern(a, p)) return true;
  }
  return false;
}

// Kahn's algorithm on K_{m,n}; bit e = i*n + j set means row i -> column j.
bool orientation_acyclic(std::size_t m, std::size_t n, std::uint64_t orientation) {
  const std::size_t vertices = m + n;
  std::vector<std::size_t> indegree(vertices, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((orientation >> (i * n + j)) & 1U) {
        ++indegree[m + j];
      } else {
        ++indegree[i];
      }
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    if (v < m) {
      for (std::size_t j = 0; j < n; ++j) {
        if (((orientation >> (v * n + j)) & 1U) && --indegree[m + j] == 0) ready.push_back(m + j);
      }
    } else {
      const std::size_t j = v - m;
      for (std::size_t i = 0; i < m; ++i) {
        if (!((orientation >> (i * n + j)) & 1U) && --indegree[i] == 0) ready.push_back(i);
      }
    }
  }
  return removed == vertices;
}

template <typename Predicate>
EquivalenceResult sweep(std::size_t m, std::size_t n, Predicate&& agrees) {
  EquivalenceResult result;
  const std::uint64_t total = std::uint64_t{1} << (m * n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto a = BitMatrix::from_mask(m, n, mask);
    ++result.checked;
    if (!agrees(a)) {
      result.counterexample = a;
      break;
    }
  }
  return result;
}

}  // namespace

ShapeGuardError::ShapeGuardError(std::size_t m, std::size_t n, std::size_t limit)
    : std::invalid_argument("shape " + std::to_string(m) + "x" + std::to_string(n) +
                            " exceeds the enumeration guard of " + std::to_string(limit) +
                            " cells") {}

std::uint64_t OracleReport::decomposable() const noexcept {
  std::uint64_t sum = 0;
  for (const auto v : d_by_order) sum += v;
  return sum;
}

OracleReport enumerate(std::size_t m, std::size_t n, const EnumerateOptions& options) {
  guard(m, n, std::min<std::size_t>(options.max_cells, 62));
  const auto start = std::chrono::steady_clock::now();

  OracleReport report;
  report.m = m;
  report.n = n;
  report.total = std::uint64_t{1} << (m * n);
  const std::size_t orders = std::min(m, n) + 1;
  report.d_by_order.assign(orders, 0);
  report.tilde_d_by_order.assign(orders, 0);

  if (m * n == 0) {
    // The single empty matrix; it has no zero rows or columns only when 0x0.
    const std::uint64_t tilde = m == 0 && n == 0 ? 1 : 0;
    report.lonesum = 1;
    report.d_by_order[0] = 1;
    report.tilde_lonesum = tilde;
    report.tilde_d_by_order[0] = tilde;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, threads);
  const std::uint64_t chunk_count =
      std::min<std::uint64_t>(report.total, std::uint64_t{threads} * 16);
  std::vector<Tally> tallies(chunk_count, Tally{0, 0, std::vector<std::uint64_t>(orders, 0),
                                                std::vector<std::uint64_t>(orders, 0)});
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (std::uint64_t c = next++; c < chunk_count; c = next++) {
      const std::uint64_t begin = report.total / chunk_count * c;
      const std::uint64_t end = c + 1 == chunk_count ? report.total : report.total / chunk_count * (c + 1);
      tally_range(m, n, begin, end, tallies[c]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& t : tallies) {
    report.lonesum += t.lonesum;
    report.tilde_lonesum += t.tilde_lonesum;
    for (std::size_t k = 0; k < orders; ++k) {
      report.d_by_order[k] += t.d[k];
      report.tilde_d_by_order[k] += t.tilde_d[k];
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

BigInt count_with_margins(std::span<const std::size_t> row_sums,
                          std::span<const std::size_t> col_sums) {
  for (const auto r : row_sums) {
    if (r > col_sums.size()) return 0;
  }
  for (const auto c : col_sums) {
    if (c > row_sums.size()) return 0;
  }
  MarginCounter counter(row_sums);
  return counter.count(0, {col_sums.begin(), col_sums.end()});
}

const std::vector<BitMatrix>& forbidden_set() { return forbidden_patterns(); }

EquivalenceResult forbidden_pattern_equivalence(std::size_t m, std::size_t n,
                                                std::size_t max_cells) {
  guard(m, n, max_cells);
  return sweep(m, n, [](const BitMatrix& a) {
    return decomposition_order(a).has_value() == !has_forbidden_pattern(a);
  });
}

EquivalenceResult complement_equivalence(std::size_t m, std::size_t n, std::size_t max_cells) {
  guard(m, n, max_cells);
  return sweep(m, n, [](const BitMatrix& a) {
    const bool both = decomposition_order(a).has_value() &&
                      decomposition_order(complement(a)).has_value();
    return both == (is_lonesum(a) || is_two_ones_blocks(a));
  });
}

EquivalenceResult margin_uniqueness(std::size_t m, std::size_t n, std::size_t max_cells) {
  guard(m, n, max_cells);
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, bool> unique;
  return sweep(m, n, [&](const BitMatrix& a) {
    auto key = std::make_pair(row_sums(a), col_sums(a));
    auto it = unique.find(key);
    if (it == unique.end()) {
      const bool one = count_with_margins(key.first, key.second) == 1;
      it = unique.emplace(std::move(key), one).first;
    }
    return is_lonesum(a) == it->second;
  });
}

BigInt acyclic_orientations(std::size_t m, std::size_t n, std::size_t max_cells) {
  guard(m, n, max_cells);
  const std::uint64_t total = std::uint64_t{1} << (m * n);
  std::uint64_t count = 0;
  for (std::uint64_t o = 0; o < total; ++o) {
    if (orientation_acyclic(m, n, o)) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

std::vector<std::pair<std::size_t, std::size_t>> shapes_up_to(std::size_t max_cells) {
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t m = 1; m <= max_cells; ++m) {
    for (std::size_t n = 1; m * n <= max_cells; ++n) shapes.emplace_back(m, n);
  }
  return shapes;
}

}  // namespace lonesum
