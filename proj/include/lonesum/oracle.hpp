#ifndef LONESUM_ORACLE_HPP
#define LONESUM_ORACLE_HPP

// Ground truth by exhaustive enumeration. Nothing here uses the closed
// forms or generating functions.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lonesum/bitmatrix.hpp"
#include "lonesum/count.hpp"

namespace lonesum {

inline constexpr std::size_t kDefaultEnumerationCells = 28;
inline constexpr std::size_t kDefaultSmallCells = 20;
inline constexpr std::size_t kDefaultOrientationCells = 16;

class ShapeGuardError : public std::invalid_argument {
 public:
  ShapeGuardError(std::size_t m, std::size_t n, std::size_t limit);
};

struct OracleReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t total = 0;  // 2^{mn}
  std::uint64_t lonesum = 0;
  std::uint64_t tilde_lonesum = 0;  // lonesum, no zero rows or columns
  std::vector<std::uint64_t> d_by_order;        // index k = 0..min(m, n)
  std::vector<std::uint64_t> tilde_d_by_order;  // same, no zero rows or columns
  std::chrono::duration<double> elapsed{};

  std::uint64_t decomposable() const noexcept;
};

struct EnumerateOptions {
  std::size_t max_cells = kDefaultEnumerationCells;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Classifies every m x n (0,1)-matrix. The range [0, 2^{mn}) is split into
/// contiguous chunks whose tallies are summed, so the result does not depend
/// on the thread count. Throws ShapeGuardError when m * n > max_cells.
OracleReport enumerate(std::size_t m, std::size_t n, const EnumerateOptions& options = {});

/// Number of (0,1)-matrices with the given row and column sums, by
/// backtracking with Gale-Ryser pruning. Inconsistent margins give 0.
BigInt count_with_margins(std::span<const std::size_t> row_sums,
                          std::span<const std::size_t> col_sums);

/// The twelve forbidden patterns.
const std::vector<BitMatrix>& forbidden_set();

struct EquivalenceResult {
  std::uint64_t checked = 0;
  std::optional<BitMatrix> counterexample;
  bool holds() const noexcept { return !counterexample.has_value(); }
};

/// For every m x n matrix: component-based decomposability agrees with the
/// absence of all forbidden patterns. Throws ShapeGuardError past max_cells.
EquivalenceResult forbidden_pattern_equivalence(std::size_t m, std::size_t n,
                                                std::size_t max_cells = kDefaultSmallCells);

/// For every m x n matrix: (A and its complement decomposable) iff (A
/// lonesum, or A ~ two all-ones diagonal blocks with no zero rows/columns).
EquivalenceResult complement_equivalence(std::size_t m, std::size_t n,
                                         std::size_t max_cells = kDefaultSmallCells);

/// For every m x n matrix: lonesum iff exactly one matrix has its margins.
EquivalenceResult margin_uniqueness(std::size_t m, std::size_t n,
                                    std::size_t max_cells = kDefaultOrientationCells);

/// Acyclic orientations of K_{m,n}, by trying all 2^{mn} orientations.
BigInt acyclic_orientations(std::size_t m, std::size_t n,
                            std::size_t max_cells = kDefaultOrientationCells);

/// All (m, n) with m, n >= 1 and m * n <= max_cells, ordered by (m, n).
std::vector<std::pair<std::size_t, std::size_t>> shapes_up_to(std::size_t max_cells);

}  // namespace lonesum

#endif  // LONESUM_ORACLE_HPP
