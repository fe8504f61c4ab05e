#include "lonesum/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace lonesum {

namespace {

using Word = BitMatrix::Word;

constexpr std::size_t words_for(std::size_t cols) {
  return (cols + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

// [first, last) offsets of the non-whitespace part of `line`.
std::pair<std::size_t, std::size_t> trim_bounds(std::string_view line) {
  std::size_t first = 0;
  std::size_t last = line.size();
  while (first < last && is_space(line[first])) ++first;
  while (last > first && is_space(line[last - 1])) --last;
  return {first, last};
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::size_t parse_dimension(std::string_view token, std::size_t line, std::size_t column) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, column, "invalid dimension '" + std::string(token) + "'");
  }
  return value;
}

// Leftmost greedy match of the pattern's columns against per-column type
// masks of a row pair. Greedy is optimal for subsequence matching.
bool match_two_rows(Word top, Word bottom, Word valid, const BitMatrix& pattern) {
  const Word types[4] = {~top & ~bottom & valid, ~top & bottom & valid, top & ~bottom & valid,
                         top & bottom & valid};
  std::size_t pos = 0;
  for (std::size_t t = 0; t < pattern.cols(); ++t) {
    if (pos >= BitMatrix::kWordBits) return false;
    const unsigned type = (pattern(0, t) ? 2U : 0U) | (pattern(1, t) ? 1U : 0U);
    const Word candidates = types[type] & (~Word{0} << pos);
    if (candidates == 0) return false;
    pos = static_cast<std::size_t>(std::countr_zero(candidates)) + 1;
  }
  return true;
}

bool contains_two_row_pattern(const BitMatrix& a, const BitMatrix& pattern) {
  const Word valid = a.cols() == 64 ? ~Word{0} : ((Word{1} << a.cols()) - 1);
  for (std::size_t i = 0; i + 1 < a.rows(); ++i) {
    for (std::size_t k = i + 1; k < a.rows(); ++k) {
      if (match_two_rows(a.row_mask(i), a.row_mask(k), valid, pattern)) return true;
    }
  }
  return false;
}

// Generic route: every increasing choice of pattern.rows() rows, then a
// greedy scan over columns.
bool contains_generic(const BitMatrix& a, const BitMatrix& pattern) {
  const std::size_t p = pattern.rows();
  const std::size_t q = pattern.cols();
  std::vector<std::size_t> chosen(p);
  std::iota(chosen.begin(), chosen.end(), 0);

  const auto columns_match = [&] {
    std::size_t t = 0;
    for (std::size_t j = 0; j < a.cols() && t < q; ++j) {
      bool ok = true;
      for (std::size_t s = 0; s < p && ok; ++s) ok = a(chosen[s], j) == pattern(s, t);
      if (ok) ++t;
    }
    return t == q;
  };

  while (true) {
    if (columns_match()) return true;
    // Next combination in lexicographic order.
    std::size_t s = p;
    while (s > 0 && chosen[s - 1] == a.rows() - p + (s - 1)) --s;
    if (s == 0) return false;
    ++chosen[s - 1];
    for (std::size_t r = s; r < p; ++r) chosen[r] = chosen[r - 1] + 1;
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                         what),
      line_(line),
      column_(column) {}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), words_(rows * words_for(cols)) {}

BitMatrix BitMatrix::from_function(std::size_t rows, std::size_t cols,
                                   const std::function<bool(std::size_t, std::size_t)>& entry) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (entry(i, j)) m.set(i, j);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows, std::size_t cols) {
  std::vector<std::string> copy(rows.begin(), rows.end());
  return from_strings(std::span<const std::string>(copy), cols);
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows in from_strings");
    for (std::size_t j = 0; j < cols; ++j) {
      const char c = rows[i][j];
      if (c == '1') {
        m.set(i, j);
      } else if (c != '0') {
        throw std::invalid_argument("illegal character in from_strings");
      }
    }
  }
  return m;
}

BitMatrix BitMatrix::from_mask(std::size_t rows, std::size_t cols, std::uint64_t mask) {
  if (rows * cols > 64) throw std::invalid_argument("from_mask needs rows * cols <= 64");
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if ((mask >> (i * cols + j)) & 1U) m.set(i, j);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_row_masks(std::span<const Word> masks, std::size_t cols) {
  if (cols > kWordBits) throw std::invalid_argument("from_row_masks needs cols <= 64");
  BitMatrix m(masks.size(), cols);
  const Word valid = cols == 64 ? ~Word{0} : ((Word{1} << cols) - 1);
  if (cols > 0) {
    for (std::size_t i = 0; i < masks.size(); ++i) m.words_[i] = masks[i] & valid;
  }
  return m;
}

bool BitMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("BitMatrix::at index out of range");
  return (*this)(i, j);
}

std::size_t BitMatrix::row_popcount(std::size_t i) const noexcept {
  std::size_t n = 0;
  for (const Word w : row(i)) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitMatrix::popcount() const noexcept {
  std::size_t n = 0;
  for (const Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t idx = 0;
  while (idx < lines.size()) {
    const auto [f, l] = trim_bounds(lines[idx]);
    if (f != l) break;
    ++idx;
  }
  if (idx == lines.size()) throw ParseError(1, 0, "missing header 'rows cols'");

  const std::size_t header_line = idx + 1;
  const std::string_view header = lines[idx];
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  for (std::size_t pos = 0; pos < header.size();) {
    while (pos < header.size() && is_space(header[pos])) ++pos;
    if (pos == header.size()) break;
    const std::size_t begin = pos;
    while (pos < header.size() && !is_space(header[pos])) ++pos;
    tokens.emplace_back(header.substr(begin, pos - begin), begin + 1);
  }
  if (tokens.size() != 2) {
    throw ParseError(header_line, 0, "header must be 'rows cols'");
  }
  const std::size_t rows = parse_dimension(tokens[0].first, header_line, tokens[0].second);
  const std::size_t cols = parse_dimension(tokens[1].first, header_line, tokens[1].second);

  BitMatrix m(rows, cols);
  ++idx;
  for (std::size_t i = 0; i < rows; ++i, ++idx) {
    if (idx >= lines.size()) {
      if (cols == 0) break;
      throw ParseError(idx + 1, 0,
                       "expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
    }
    const std::string_view line = lines[idx];
    const auto [first, last] = trim_bounds(line);
    for (std::size_t j = 0; first + j < last; ++j) {
      const char c = line[first + j];
      if (c != '0' && c != '1') {
        throw ParseError(idx + 1, first + j + 1, std::string("illegal character '") + c + "'");
      }
      if (j >= cols) {
        throw ParseError(idx + 1, first + j + 1,
                         "row has more than " + std::to_string(cols) + " entries");
      }
      if (c == '1') m.set(i, j);
    }
    if (last - first != cols) {
      throw ParseError(idx + 1, last + 1,
                       "row has " + std::to_string(last - first) + " entries, expected " +
                           std::to_string(cols));
    }
  }
  for (; idx < lines.size(); ++idx) {
    const auto [f, l] = trim_bounds(lines[idx]);
    if (f != l) throw ParseError(idx + 1, f + 1, "unexpected content after last row");
  }
  return m;
}

std::string to_text(const BitMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string to_compact(const BitMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out.push_back(';');
    for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(i, j) ? '1' : '0');
  }
  return out;
}

std::vector<std::size_t> row_sums(const BitMatrix& a) {
  std::vector<std::size_t> sums(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) sums[i] = a.row_popcount(i);
  return sums;
}

std::vector<std::size_t> col_sums(const BitMatrix& a) {
  std::vector<std::size_t> sums(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto words = a.row(i);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (Word bits = words[w]; bits != 0; bits &= bits - 1) {
        ++sums[w * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
  }
  return sums;
}

BitMatrix transpose(const BitMatrix& a) {
  return BitMatrix::from_function(a.cols(), a.rows(),
                                  [&](std::size_t i, std::size_t j) { return a(j, i); });
}

BitMatrix complement(const BitMatrix& a) {
  return BitMatrix::from_function(a.rows(), a.cols(),
                                  [&](std::size_t i, std::size_t j) { return !a(i, j); });
}

BitMatrix submatrix(const BitMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  return BitMatrix::from_function(rows.size(), cols.size(), [&](std::size_t i, std::size_t j) {
    return a.at(rows[i], cols[j]);
  });
}

bool contains_pattern(const BitMatrix& a, const BitMatrix& pattern) {
  if (pattern.empty()) throw std::invalid_argument("contains_pattern: empty pattern");
  if (pattern.rows() > a.rows() || pattern.cols() > a.cols()) return false;
  if (pattern.rows() == 2 && a.cols() <= BitMatrix::kWordBits) {
    return contains_two_row_pattern(a, pattern);
  }
  if (pattern.cols() == 2 && a.rows() <= BitMatrix::kWordBits) {
    return contains_two_row_pattern(transpose(a), transpose(pattern));
  }
  return contains_generic(a, pattern);
}

}  // namespace lonesum
