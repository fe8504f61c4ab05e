#include "lonesum/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace lonesum {

namespace {

using Word = BitMatrix::Word;

bool row_subset(const BitMatrix& a, std::size_t sub, std::size_t super) {
  const auto s = a.row(sub);
  const auto t = a.row(super);
  for (std::size_t w = 0; w < s.size(); ++w) {
    if (s[w] & ~t[w]) return false;
  }
  return true;
}

// Rows (given as indices into `a`) form an inclusion chain.
bool rows_form_chain(const BitMatrix& a, std::vector<std::size_t> rows) {
  std::vector<std::size_t> weight(rows.size());
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t k = 0; k < rows.size(); ++k) weight[k] = a.row_popcount(rows[k]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return weight[x] > weight[y]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (!row_subset(a, rows[order[k]], rows[order[k - 1]])) return false;
  }
  return true;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }

  std::vector<std::size_t> parent;
};

// Column type within a pair of rows: bit 1 = top entry, bit 0 = bottom entry.
unsigned pair_type(const BitMatrix& a, std::size_t top, std::size_t bottom, std::size_t j) {
  return (a(top, j) ? 2U : 0U) | (a(bottom, j) ? 1U : 0U);
}

// Lex-smallest increasing column triple whose types over (r1, r2) are 11, 10
// and 01 in some order.
std::optional<std::array<std::size_t, 3>> best_column_triple(const BitMatrix& a, std::size_t r1,
                                                             std::size_t r2) {
  static constexpr std::array<std::array<unsigned, 3>, 6> kOrders = {{{3, 2, 1},
                                                                      {3, 1, 2},
                                                                      {2, 3, 1},
                                                                      {2, 1, 3},
                                                                      {1, 3, 2},
                                                                      {1, 2, 3}}};
  std::optional<std::array<std::size_t, 3>> best;
  for (const auto& types : kOrders) {
    std::array<std::size_t, 3> cols{};
    std::size_t next = 0;
    bool ok = true;
    for (std::size_t t = 0; t < 3 && ok; ++t) {
      while (next < a.cols() && pair_type(a, r1, r2, next) != types[t]) ++next;
      if (next == a.cols()) {
        ok = false;
      } else {
        cols[t] = next++;
      }
    }
    if (ok && (!best || cols < *best)) best = cols;
  }
  return best;
}

// Three rows over two columns form 11, 10, 01 in some row order.
bool three_rows_match(const BitMatrix& a, std::size_t r1, std::size_t r2, std::size_t r3,
                      std::size_t c1, std::size_t c2) {
  unsigned seen = 0;
  for (const std::size_t r : {r1, r2, r3}) {
    const unsigned t = (a(r, c1) ? 2U : 0U) | (a(r, c2) ? 1U : 0U);
    if (t == 0) return false;
    seen |= 1U << t;
  }
  return seen == 0b1110;
}

std::size_t pattern_index(const BitMatrix& sub) {
  const auto& patterns = forbidden_patterns();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i] == sub) return i;
  }
  throw std::logic_error("witness submatrix is not a forbidden pattern");
}

// Sorted order of `indices` by (weight desc, index asc).
void sort_by_weight(std::vector<std::size_t>& indices, const std::vector<std::size_t>& weight) {
  std::sort(indices.begin(), indices.end(), [&](std::size_t x, std::size_t y) {
    if (weight[x] != weight[y]) return weight[x] > weight[y];
    return x < y;
  });
}

}  // namespace

const std::vector<BitMatrix>& forbidden_patterns() {
  static const std::vector<BitMatrix> patterns = {
      BitMatrix::from_strings({"110", "101"}),      BitMatrix::from_strings({"101", "110"}),
      BitMatrix::from_strings({"110", "011"}),      BitMatrix::from_strings({"011", "110"}),
      BitMatrix::from_strings({"101", "011"}),      BitMatrix::from_strings({"011", "101"}),
      BitMatrix::from_strings({"11", "10", "01"}),  BitMatrix::from_strings({"11", "01", "10"}),
      BitMatrix::from_strings({"10", "11", "01"}),  BitMatrix::from_strings({"01", "11", "10"}),
      BitMatrix::from_strings({"10", "01", "11"}),  BitMatrix::from_strings({"01", "10", "11"}),
  };
  return patterns;
}

NotDecomposableError::NotDecomposableError(Witness w)
    : std::runtime_error("matrix is not lonesum decomposable"), witness_(std::move(w)) {}

std::size_t FerrersBlock::cells() const noexcept {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{0});
}

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::Lonesum: return "lonesum";
    case PairClass::TwoOnesBlocks: return "two_ones_blocks";
    case PairClass::OnlyAFails: return "only_matrix_fails";
    case PairClass::OnlyComplementFails: return "only_complement_fails";
    case PairClass::BothFail: return "both_fail";
    case PairClass::Unexplained: return "unexplained";
  }
  return "unknown";
}

bool is_ferrers(const BitMatrix& a) {
  std::size_t previous = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::size_t weight = a.row_popcount(i);
    if (weight > previous) return false;
    for (std::size_t j = 0; j < weight; ++j) {
      if (!a(i, j)) return false;
    }
    previous = weight;
  }
  return true;
}

bool is_lonesum(const BitMatrix& a) {
  std::vector<std::size_t> rows(a.rows());
  std::iota(rows.begin(), rows.end(), 0);
  return rows_form_chain(a, std::move(rows));
}

ComponentSplit components(const BitMatrix& a) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  DisjointSets sets(a.rows());
  std::vector<std::size_t> first_row(a.cols(), kNone);
  std::vector<bool> nonzero_row(a.rows(), false);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto words = a.row(i);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (Word bits = words[w]; bits != 0; bits &= bits - 1) {
        const std::size_t j =
            w * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        nonzero_row[i] = true;
        if (first_row[j] == kNone) {
          first_row[j] = i;
        } else {
          sets.unite(first_row[j], i);
        }
      }
    }
  }

  ComponentSplit split;
  std::vector<std::size_t> slot(a.rows(), kNone);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!nonzero_row[i]) {
      split.zero_rows.push_back(i);
      continue;
    }
    const std::size_t root = sets.find(i);
    if (slot[root] == kNone) {
      slot[root] = split.components.size();
      split.components.emplace_back();
    }
    split.components[slot[root]].rows.push_back(i);
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (first_row[j] == kNone) {
      split.zero_cols.push_back(j);
    } else {
      split.components[slot[sets.find(first_row[j])]].cols.push_back(j);
    }
  }
  return split;
}

std::optional<std::size_t> decomposition_order(const BitMatrix& a) {
  auto split = components(a);
  for (auto& component : split.components) {
    if (!rows_form_chain(a, std::move(component.rows))) return std::nullopt;
  }
  return split.components.size();
}

int decomposition_order_rows(std::span<const Word> rows) {
  const std::size_t m = rows.size();
  if (m > 64) {
    std::size_t cols = 0;
    for (const Word r : rows) cols = std::max<std::size_t>(cols, 64 - std::countl_zero(r));
    const auto order = decomposition_order(BitMatrix::from_row_masks(rows, cols));
    return order ? static_cast<int>(*order) : -1;
  }

  // Intersecting rows must be nested, and "intersects" must be transitive:
  // each class is then an inclusion chain, i.e. one lonesum block.
  std::array<std::uint64_t, 64> meets{};
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i] == 0) continue;
    meets[i] |= std::uint64_t{1} << i;
    for (std::size_t j = i + 1; j < m; ++j) {
      const Word common = rows[i] & rows[j];
      if (common == 0) continue;
      if ((rows[i] & ~rows[j]) && (rows[j] & ~rows[i])) return -1;
      meets[i] |= std::uint64_t{1} << j;
      meets[j] |= std::uint64_t{1} << i;
    }
  }
  int order = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t cls = meets[i];
    if (cls == 0) continue;
    for (std::uint64_t rest = cls; rest != 0; rest &= rest - 1) {
      if (meets[static_cast<std::size_t>(std::countr_zero(rest))] != cls) return -1;
    }
    if (static_cast<std::size_t>(std::countr_zero(cls)) == i) ++order;
  }
  return order;
}

std::optional<Witness> find_forbidden(const BitMatrix& a) {
  using Tuple = std::array<std::size_t, 5>;
  struct Candidate {
    Tuple indices;
    bool three_rows;
  };
  for (std::size_t r1 = 0; r1 + 1 < a.rows(); ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < a.rows(); ++r2) {
      std::optional<Candidate> best;
      if (const auto triple = best_column_triple(a, r1, r2)) {
        best = Candidate{{r1, r2, (*triple)[0], (*triple)[1], (*triple)[2]}, false};
      }
      bool found3 = false;
      for (std::size_t r3 = r2 + 1; r3 < a.rows() && !found3; ++r3) {
        if (best && best->indices[2] < r3) break;
        for (std::size_t c1 = 0; c1 + 1 < a.cols() && !found3; ++c1) {
          for (std::size_t c2 = c1 + 1; c2 < a.cols() && !found3; ++c2) {
            if (!three_rows_match(a, r1, r2, r3, c1, c2)) continue;
            found3 = true;
            const Tuple indices{r1, r2, r3, c1, c2};
            if (!best || indices < best->indices) best = Candidate{indices, true};
          }
        }
      }
      if (!best) continue;

      const Tuple& t = best->indices;
      Witness w;
      if (best->three_rows) {
        w.rows = {t[0], t[1], t[2]};
        w.cols = {t[3], t[4]};
      } else {
        w.rows = {t[0], t[1]};
        w.cols = {t[2], t[3], t[4]};
      }
      w.pattern = pattern_index(submatrix(a, w.rows, w.cols));
      return w;
    }
  }
  return std::nullopt;
}

Classification classify(const BitMatrix& a) {
  if (const auto order = decomposition_order(a)) return Classification::decomposable(*order);
  auto witness = find_forbidden(a);
  if (!witness) throw std::logic_error("non-decomposable matrix without a forbidden pattern");
  return Classification::not_decomposable(std::move(*witness));
}

Decomposition decompose(const BitMatrix& a) {
  auto split = components(a);
  const auto rsum = row_sums(a);
  const auto csum = col_sums(a);

  Decomposition d;
  d.zero_rows = std::move(split.zero_rows);
  d.zero_cols = std::move(split.zero_cols);
  for (auto& component : split.components) {
    if (!rows_form_chain(a, component.rows)) {
      auto witness = find_forbidden(a);
      if (!witness) throw std::logic_error("non-decomposable matrix without a forbidden pattern");
      throw NotDecomposableError(std::move(*witness));
    }
    FerrersBlock block;
    block.rows = std::move(component.rows);
    block.cols = std::move(component.cols);
    sort_by_weight(block.rows, rsum);
    sort_by_weight(block.cols, csum);
    for (const std::size_t r : block.rows) block.shape.push_back(rsum[r]);
    d.blocks.push_back(std::move(block));
  }
  std::sort(d.blocks.begin(), d.blocks.end(), [](const FerrersBlock& x, const FerrersBlock& y) {
    const std::size_t cx = x.cells();
    const std::size_t cy = y.cells();
    if (cx != cy) return cx > cy;
    if (x.shape != y.shape) return x.shape > y.shape;
    return *std::min_element(x.rows.begin(), x.rows.end()) <
           *std::min_element(y.rows.begin(), y.rows.end());
  });
  return d;
}

BitMatrix reassemble(const Decomposition& d, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<bool>> cells(rows, std::vector<bool>(cols, false));
  for (const auto& block : d.blocks) {
    for (std::size_t t = 0; t < block.rows.size(); ++t) {
      for (std::size_t s = 0; s < block.shape[t]; ++s) cells[block.rows[t]][block.cols[s]] = true;
    }
  }
  return BitMatrix::from_function(rows, cols,
                                  [&](std::size_t i, std::size_t j) { return bool(cells[i][j]); });
}

BitMatrix decomposition_matrix(const Decomposition& d) {
  std::size_t rows = d.zero_rows.size();
  std::size_t cols = d.zero_cols.size();
  for (const auto& block : d.blocks) {
    rows += block.rows.size();
    cols += block.cols.size();
  }
  // Offsets of each block on the diagonal.
  std::vector<std::size_t> row_block(rows, d.blocks.size());
  std::vector<std::size_t> row_local(rows, 0);
  std::vector<std::size_t> col_start(d.blocks.size(), 0);
  std::size_t r = 0;
  std::size_t c = 0;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    col_start[b] = c;
    for (std::size_t t = 0; t < d.blocks[b].rows.size(); ++t, ++r) {
      row_block[r] = b;
      row_local[r] = t;
    }
    c += d.blocks[b].cols.size();
  }
  return BitMatrix::from_function(rows, cols, [&](std::size_t i, std::size_t j) {
    const std::size_t b = row_block[i];
    if (b == d.blocks.size() || j < col_start[b]) return false;
    return j - col_start[b] < d.blocks[b].shape[row_local[i]];
  });
}

bool is_two_ones_blocks(const BitMatrix& a) {
  const auto order = decomposition_order(a);
  if (!order || *order != 2) return false;
  const auto d = decompose(a);
  if (!d.zero_rows.empty() || !d.zero_cols.empty()) return false;
  return std::all_of(d.blocks.begin(), d.blocks.end(), [](const FerrersBlock& b) {
    return std::all_of(b.shape.begin(), b.shape.end(),
                       [&](std::size_t part) { return part == b.cols.size(); });
  });
}

PairClass pair_classify(const BitMatrix& a) {
  const bool a_ok = decomposition_order(a).has_value();
  const bool c_ok = decomposition_order(complement(a)).has_value();
  if (a_ok && c_ok) {
    if (is_lonesum(a)) return PairClass::Lonesum;
    if (is_two_ones_blocks(a)) return PairClass::TwoOnesBlocks;
    return PairClass::Unexplained;
  }
  if (a_ok) return PairClass::OnlyComplementFails;
  if (c_ok) return PairClass::OnlyAFails;
  return PairClass::BothFail;
}

}  // namespace lonesum
