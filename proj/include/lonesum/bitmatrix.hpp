#ifndef LONESUM_BITMATRIX_HPP
#define LONESUM_BITMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lonesum {

/// Error raised by parse_matrix. Carries the 1-based line and column of the
/// offending input (column 0 when the whole line is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Immutable bit-packed (0,1)-matrix.
///
/// Rows are stored row-major, each row occupying words_per_row() 64-bit
/// words; bit j % 64 of word j / 64 holds entry (i, j). Bits beyond cols()
/// are always zero. Either dimension may be zero, and a 0x3 matrix is a
/// different value from a 3x0 one.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// The 0x0 matrix.
  BitMatrix() = default;

  /// All-zero matrix of the given shape.
  BitMatrix(std::size_t rows, std::size_t cols);

  /// Builds a matrix from entry(i, j).
  static BitMatrix from_function(std::size_t rows, std::size_t cols,
                                 const std::function<bool(std::size_t, std::size_t)>& entry);

  /// Builds a matrix from strings of '0'/'1', one per row. All rows must have
  /// the same length; `cols` is only consulted when `rows` is empty.
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows,
                                std::size_t cols = 0);
  static BitMatrix from_strings(std::span<const std::string> rows, std::size_t cols = 0);

  /// Row-major bit pattern with bit (i * cols + j) holding entry (i, j).
  /// Requires rows * cols <= 64.
  static BitMatrix from_mask(std::size_t rows, std::size_t cols, std::uint64_t mask);

  /// Matrix whose rows are the given single-word masks. Requires cols <= 64.
  static BitMatrix from_row_masks(std::span<const Word> masks, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool operator()(std::size_t i, std::size_t j) const noexcept {
    return (words_[i * words_per_row_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }

  /// Checked access; throws std::out_of_range.
  bool at(std::size_t i, std::size_t j) const;

  std::span<const Word> row(std::size_t i) const noexcept {
    return {words_.data() + i * words_per_row_, words_per_row_};
  }

  /// Single-word row mask; only meaningful when cols() <= 64.
  Word row_mask(std::size_t i) const noexcept {
    return words_per_row_ == 0 ? 0 : words_[i * words_per_row_];
  }

  std::size_t row_popcount(std::size_t i) const noexcept;
  std::size_t popcount() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  friend BitMatrix parse_matrix(std::string_view text);

  void set(std::size_t i, std::size_t j) noexcept {
    words_[i * words_per_row_ + j / kWordBits] |= Word{1} << (j % kWordBits);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> words_;
};

/// Parses the text format
///
///     m n
///     <m lines of exactly n characters from {0,1}>
///
/// Leading/trailing whitespace around the header and each row is ignored, as
/// are blank lines after the last row.
BitMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix; always ends with a newline.
std::string to_text(const BitMatrix& a);

/// Rows joined by ';', e.g. "110;101". Empty matrices render as "" .
std::string to_compact(const BitMatrix& a);

std::vector<std::size_t> row_sums(const BitMatrix& a);
std::vector<std::size_t> col_sums(const BitMatrix& a);

BitMatrix transpose(const BitMatrix& a);
BitMatrix complement(const BitMatrix& a);

/// Rows and columns selected (in the given order) from `a`.
BitMatrix submatrix(const BitMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols);

/// True when `pattern` occurs in `a` as an order-preserving submatrix.
/// Throws std::invalid_argument for an empty pattern.
bool contains_pattern(const BitMatrix& a, const BitMatrix& pattern);

}  // namespace lonesum

#endif  // LONESUM_BITMATRIX_HPP
