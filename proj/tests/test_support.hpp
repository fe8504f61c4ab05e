#ifndef LONESUM_TEST_SUPPORT_HPP
#define LONESUM_TEST_SUPPORT_HPP

// Brute-force helpers shared by the unit tests. They deliberately avoid the
// library's fast paths so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "lonesum/bitmatrix.hpp"

namespace test_support {

using lonesum::BitMatrix;

inline BitMatrix mat(std::initializer_list<std::string_view> rows, std::size_t cols = 0) {
  return BitMatrix::from_strings(rows, cols);
}

/// Calls fn(indices) for every strictly increasing k-subset of [0, n).
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

/// Tries every row and column subset of the pattern's size.
inline bool brute_contains(const BitMatrix& a, const BitMatrix& p) {
  bool found = false;
  for_each_combination(a.rows(), p.rows(), [&](const std::vector<std::size_t>& rs) {
    if (found) return;
    for_each_combination(a.cols(), p.cols(), [&](const std::vector<std::size_t>& cs) {
      if (found) return;
      bool match = true;
      for (std::size_t s = 0; s < rs.size() && match; ++s) {
        for (std::size_t t = 0; t < cs.size() && match; ++t) {
          match = a(rs[s], cs[t]) == p(s, t);
        }
      }
      found = match;
    });
  });
  return found;
}

/// Lonesum by scanning every 2x2 submatrix for a permutation pattern.
inline bool brute_lonesum(const BitMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = i + 1; k < a.rows(); ++k) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t l = j + 1; l < a.cols(); ++l) {
          if (a(i, j) == a(k, l) && a(i, l) == a(k, j) && a(i, j) != a(i, l)) return false;
        }
      }
    }
  }
  return true;
}

/// Every matrix of every shape with 1 <= rows * cols <= max_cells.
inline void for_each_small_matrix(std::size_t max_cells,
                                  const std::function<void(const BitMatrix&)>& fn) {
  for (std::size_t m = 1; m <= max_cells; ++m) {
    for (std::size_t n = 1; m * n <= max_cells; ++n) {
      const std::uint64_t count = std::uint64_t{1} << (m * n);
      for (std::uint64_t mask = 0; mask < count; ++mask) fn(BitMatrix::from_mask(m, n, mask));
    }
  }
}

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n,
                               double density = 0.5) {
  std::bernoulli_distribution bit(density);
  return BitMatrix::from_function(m, n, [&](std::size_t, std::size_t) { return bit(rng); });
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Rows and columns of `a` rearranged by the given permutations.
inline BitMatrix permute(const BitMatrix& a, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  return lonesum::submatrix(a, rows, cols);
}

}  // namespace test_support

#endif  // LONESUM_TEST_SUPPORT_HPP
