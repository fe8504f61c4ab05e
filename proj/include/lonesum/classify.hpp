#ifndef LONESUM_CLASSIFY_HPP
#define LONESUM_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lonesum/bitmatrix.hpp"

namespace lonesum {

/// The twelve forbidden 2x3 / 3x2 patterns: all row and column permutations
/// of U = (110;101) and of its transpose, in the conventional listing order
/// (element 0 is U itself, elements 6..11 are the 3x2 ones).
const std::vector<BitMatrix>& forbidden_patterns();

/// Occurrence of a forbidden pattern inside a matrix.
struct Witness {
  std::vector<std::size_t> rows;  // increasing original row indices
  std::vector<std::size_t> cols;  // increasing original column indices
  std::size_t pattern = 0;        // index into forbidden_patterns()

  friend bool operator==(const Witness&, const Witness&) = default;
};

class Classification {
 public:
  static Classification decomposable(std::size_t order) { return Classification(order, {}); }
  static Classification not_decomposable(Witness w) { return Classification(0, std::move(w)); }

  bool is_decomposable() const noexcept { return !witness_.has_value(); }
  /// Decomposition order; only meaningful when is_decomposable().
  std::size_t order() const noexcept { return order_; }
  const std::optional<Witness>& witness() const noexcept { return witness_; }

 private:
  Classification(std::size_t order, std::optional<Witness> w)
      : order_(order), witness_(std::move(w)) {}

  std::size_t order_;
  std::optional<Witness> witness_;
};

struct Component {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

struct ComponentSplit {
  std::vector<Component> components;  // ordered by smallest row index
  std::vector<std::size_t> zero_rows;
  std::vector<std::size_t> zero_cols;
};

/// One nonzero block of a decomposition. `rows` and `cols` list original
/// indices in Ferrers order; block row t has ones exactly in the first
/// shape[t] entries of `cols`.
struct FerrersBlock {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::size_t> shape;

  std::size_t cells() const noexcept;
  friend bool operator==(const FerrersBlock&, const FerrersBlock&) = default;
};

struct Decomposition {
  std::vector<FerrersBlock> blocks;
  std::vector<std::size_t> zero_rows;
  std::vector<std::size_t> zero_cols;

  std::size_t order() const noexcept { return blocks.size(); }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Thrown by decompose() on non-decomposable input.
class NotDecomposableError : public std::runtime_error {
 public:
  explicit NotDecomposableError(Witness w);
  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

enum class PairClass {
  Lonesum,              // A and its complement decomposable; A lonesum
  TwoOnesBlocks,        // ... A ~ (1 O; O 1) without zero rows or columns
  OnlyAFails,           // complement decomposable, A not
  OnlyComplementFails,  // A decomposable, complement not
  BothFail,
  Unexplained,          // both decomposable, neither branch holds (never expected)
};

std::string_view to_string(PairClass c);

bool is_ferrers(const BitMatrix& a);

/// No (10;01) or (01;10) submatrix. Runs in O(m n / 64 + m log m): the rows,
/// sorted by weight, must form an inclusion chain.
bool is_lonesum(const BitMatrix& a);

ComponentSplit components(const BitMatrix& a);

/// Decomposition order, or nullopt when `a` is not lonesum decomposable.
std::optional<std::size_t> decomposition_order(const BitMatrix& a);

/// Same as decomposition_order for a matrix given by single-word row masks
/// (cols <= 64). Returns -1 when not decomposable. Allocation-free for up to
/// 64 rows; this is the enumeration hot path.
int decomposition_order_rows(std::span<const BitMatrix::Word> rows);

Classification classify(const BitMatrix& a);

/// Lexicographically smallest (rows..., cols...) occurrence of a forbidden
/// pattern, if any.
std::optional<Witness> find_forbidden(const BitMatrix& a);

Decomposition decompose(const BitMatrix& a);

/// Rebuilds the matrix described by `d` in original coordinates.
BitMatrix reassemble(const Decomposition& d, std::size_t rows, std::size_t cols);

/// The canonical block-diagonal form: blocks in order, then the zero block.
BitMatrix decomposition_matrix(const Decomposition& d);

/// Order 2, both blocks all-ones, no zero rows or columns.
bool is_two_ones_blocks(const BitMatrix& a);

PairClass pair_classify(const BitMatrix& a);

}  // namespace lonesum

#endif  // LONESUM_CLASSIFY_HPP
