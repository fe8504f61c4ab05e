#ifndef LONESUM_COUNT_HPP
#define LONESUM_COUNT_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lonesum {

using BigInt = mpz_class;

/// Frozen tables of Stirling numbers (both kinds), binomials and factorials
/// for arguments 0..capacity. Built once by recurrence, then read-only.
class CountTable {
 public:
  explicit CountTable(std::size_t capacity);

  /// Process-wide table with capacity >= `capacity`. Grows (by rebuilding a
  /// larger table) under a lock; previously returned tables stay valid.
  static std::shared_ptr<const CountTable> shared(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }

  /// Stirling numbers of the second kind {n k}.
  const BigInt& stirling2(std::size_t n, std::size_t k) const;
  /// Unsigned Stirling numbers of the first kind [n k].
  const BigInt& stirling1u(std::size_t n, std::size_t k) const;
  const BigInt& binomial(std::size_t n, std::size_t k) const;
  const BigInt& factorial(std::size_t n) const;

 private:
  void check(std::size_t n) const;

  std::size_t capacity_;
  std::vector<std::vector<BigInt>> stirling2_;
  std::vector<std::vector<BigInt>> stirling1u_;
  std::vector<std::vector<BigInt>> binomial_;
  std::vector<BigInt> factorial_;
  BigInt zero_;
};

// Convenience wrappers over CountTable::shared(). Arguments outside the
// triangle (k > n) give 0.
BigInt stirling2(std::size_t n, std::size_t k);
BigInt stirling1u(std::size_t n, std::size_t k);
BigInt binomial(std::size_t n, std::size_t k);
BigInt factorial(std::size_t n);

/// Number of m x n lonesum matrices:
/// sum_j (j!)^2 {m+1 j+1} {n+1 j+1}.
BigInt lonesum_count(std::size_t m, std::size_t n);

/// Lonesum matrices with no zero rows or columns, by binomial inversion of
/// lonesum_count: sum_{i,j} (-1)^{m-i+n-j} C(m,i) C(n,j) L(i,j).
BigInt tilde_lonesum_count(std::size_t m, std::size_t n);

/// Poly-Bernoulli number B_n^(-m), from the explicit formula
/// (-1)^n sum_j (-1)^j j! {n j} (j+1)^m. Independent of lonesum_count.
BigInt poly_bernoulli_neg(std::size_t m, std::size_t n);

/// Number D_k(m, n) of m x n lonesum decomposable matrices of order k.
/// D_0 = 1 everywhere; D_k(m, 0) = D_k(0, n) = 0 for k >= 1.
BigInt d_k(std::size_t k, std::size_t m, std::size_t n);

/// D(m, n) = sum over k of D_k(m, n).
BigInt d_total(std::size_t m, std::size_t n);

struct RecurrenceSides {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

/// Both sides of
///   D_k(m+1, n) = D_k(m, n)
///     + sum_{l<n} C(n, l) ((k-1) D_k(m, l) + D_{k-1}(m, l) + D_k(m, l+1)).
/// Requires k >= 1.
RecurrenceSides recurrence_sides(std::size_t k, std::size_t m, std::size_t n);
bool recurrence_check(std::size_t k, std::size_t m, std::size_t n);

/// Trial division.
bool is_prime(std::uint64_t p);

/// Inverse of a modulo prime p via the extended Euclidean algorithm.
/// Throws std::domain_error when a is divisible by p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Canonical residue in [0, p).
std::int64_t mod_of(const BigInt& value, std::int64_t p);

struct CongruenceViolation {
  std::string rule;  // e.g. "vanishing", "periodicity", "stirling_closed_form"
  // For the stirling_* rules: k is the lower index i, m the upper index and
  // n the compared upper index m' (0 when unused).
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  BigInt expected;  // residue (or exact value for stirling_closed_form)
  BigInt actual;
};

struct CongruenceReport {
  std::uint64_t p = 0;
  std::size_t checks = 0;
  std::vector<CongruenceViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks, for 1 <= k <= k_max and 1 <= m, n <= mn_max:
///   vanishing:    D_k(m, n) = 0 mod p when k >= p;
///   periodicity:  D_k(m, n) = D_k(m', n') mod p when m = m', n = n' mod (p - 1);
///   row_p_minus_1: D_k(p-1, n) = 0, or (-1)^(k-1) / (k-1)! when (p - 1) | n,
///                 for p > k;
///   row_p:        D_k(p, n) = 2^n - 1 (k = 1) or 0 (k >= 2).
/// Expected residues come from modular arithmetic, actual ones from the
/// exact values. Throws std::invalid_argument when p is not prime.
CongruenceReport congruence_report(std::uint64_t p, std::size_t k_max, std::size_t mn_max);

/// Checks, for arguments up to `range`:
///   stirling_periodicity: {m i} = {m' i} mod p for positive m = m' mod (p - 1),
///                         0 <= i <= p;
///   stirling_prime_row:   {p i} = 0 mod p for 2 <= i <= p - 1;
///   stirling_closed_form: {m 2} = 2^(m-1) - 1 for m >= 1.
/// Throws std::invalid_argument when p is not prime.
CongruenceReport stirling_lemma_report(std::uint64_t p, std::size_t range);
bool stirling_lemma_check(std::uint64_t p, std::size_t range);

}  // namespace lonesum

#endif  // LONESUM_COUNT_HPP
