#ifndef LONESUM_SERIES_HPP
#define LONESUM_SERIES_HPP

// Truncated exponential generating functions with exact rational
// coefficients. All series store EGF coefficients: a UniSeries holds a_n in
// sum a_n t^n / n!, a BiSeries holds a_{m,n} in sum a_{m,n} x^m y^n / (m! n!).
// Products are therefore binomial convolutions.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "lonesum/count.hpp"

namespace lonesum {

using Rational = mpq_class;

inline constexpr std::size_t kDefaultSeriesOrder = 12;

class UniSeries {
 public:
  /// Zero series truncated after t^order.
  explicit UniSeries(std::size_t order);

  static UniSeries constant(const Rational& c, std::size_t order);
  /// e^{a t}.
  static UniSeries exp_linear(const Rational& a, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& coeff(std::size_t n) const { return coeffs_.at(n); }
  Rational& coeff(std::size_t n) { return coeffs_.at(n); }

  UniSeries& operator+=(const UniSeries& other);
  UniSeries& operator-=(const UniSeries& other);
  UniSeries& operator*=(const Rational& scalar);

  friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
  friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
  friend UniSeries operator*(UniSeries a, const Rational& s) { return a *= s; }
  /// Binomial convolution, truncated to the smaller order.
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

class BiSeries {
 public:
  /// Zero series keeping coefficients with m + n <= order.
  explicit BiSeries(std::size_t order);

  static BiSeries constant(const Rational& c, std::size_t order);
  /// e^{a x + b y}: coefficient a^m b^n.
  static BiSeries elementary(long a, long b, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const Rational& coeff(std::size_t m, std::size_t n) const;
  Rational& coeff(std::size_t m, std::size_t n);

  /// Copy truncated (or zero-extended) to a different order.
  BiSeries with_order(std::size_t order) const;

  BiSeries& operator+=(const BiSeries& other);
  BiSeries& operator-=(const BiSeries& other);
  BiSeries& operator*=(const Rational& scalar);

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(BiSeries a, const Rational& s) { return a *= s; }
  /// (fg)_{m,n} = sum C(m,i) C(n,j) f_{i,j} g_{m-i,n-j}, truncated to the
  /// smaller order.
  friend BiSeries operator*(const BiSeries& f, const BiSeries& g);

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::size_t order_;
  std::vector<std::vector<Rational>> coeffs_;  // coeffs_[m][n], n <= order - m
};

/// Multiplicative inverse by Newton iteration with doubling precision.
/// Throws std::domain_error when the constant term is zero.
BiSeries recip(const BiSeries& f);

/// exp(f) for f with zero constant term, from the Euler-operator recurrence
/// d * g_d = sum_e e * (f_e g_{d-e}) on total-degree slices.
/// Throws std::domain_error on a nonzero constant term.
BiSeries exp(const BiSeries& f);

BiSeries pow(const BiSeries& f, std::size_t k);

/// Total-degree Euler operator x d/dx + y d/dy.
BiSeries euler(const BiSeries& f);

/// m! n! [x^m y^n] f, i.e. the stored EGF coefficient.
/// Throws std::out_of_range when m + n exceeds the order.
Rational extract(const BiSeries& f, std::size_t m, std::size_t n);

/// As extract(), additionally requiring an integral value
/// (std::domain_error otherwise).
BigInt extract_integer(const BiSeries& f, std::size_t m, std::size_t n);

/// e^x + e^y - e^{x+y}.
BiSeries lonesum_denominator(std::size_t order);

/// 1 / (e^x + e^y - e^{x+y}): lonesum matrices without zero rows or columns.
BiSeries tilde_lonesum_egf(std::size_t order);

/// e^{x+y} / (e^x + e^y - e^{x+y}): all lonesum matrices.
BiSeries lonesum_egf(std::size_t order);

/// (1/k!) (1/(e^x + e^y - e^{x+y}) - 1)^k: order-k decomposable matrices
/// without zero rows or columns.
BiSeries tilde_d_k_egf(std::size_t k, std::size_t order);

/// e^{x+y} / k! * (1/(e^x + e^y - e^{x+y}) - 1)^k.
BiSeries d_k_egf(std::size_t k, std::size_t order);

/// exp(1/(e^x + e^y - e^{x+y}) + x + y - 1).
BiSeries d_egf(std::size_t order);

/// Li*_{k_1..k_r}(z) for nonpositive indices, composed with z = 1 - e^{-t}:
///   sum over 1 <= m_1 <= ... <= m_r of z^{m_r} / (m_1^{k_1} ... m_r^{k_r}).
/// Throws std::invalid_argument on empty indices or a positive index.
UniSeries li_star_series(std::span<const long> indices, std::size_t order);

/// Li*_{k_1..k_r}(z) / z with z = 1 - e^{-t}.
UniSeries li_star_over_z(std::span<const long> indices, std::size_t order);

/// Multi-poly-Bernoulli-star polynomial value B_{n,*}^{(k_1..k_r)}(x0):
/// n-th EGF coefficient of e^{-x0 t} Li*(1 - e^{-t}) / (1 - e^{-t}).
Rational multi_pb_star(std::span<const long> indices, const Rational& x0, std::size_t n);

/// Poly-Bernoulli polynomial B_n^{(index)}(x0), index <= 0.
Rational poly_bernoulli_poly(long index, const Rational& x0, std::size_t n);

struct IdentityCheck {
  Rational expected;  // D_k(m, n) from the Stirling closed form
  Rational computed;  // the identity's right-hand side
  bool holds() const { return expected == computed; }
};

/// D_k(m, n) = (-1)^k / k! (1 + sum_{i=1..k} C(k,i) (-1)^i
///             B_{n,*}^{(0,...,0,-m)}(i-1)), with i-1 leading zeros.
IdentityCheck star_polynomial_identity(std::size_t k, std::size_t m, std::size_t n);
bool verify_star_polynomial_identity(std::size_t k, std::size_t m, std::size_t n);

/// Sum_j [n j] B_m^{(-l-j)}(n), from poly-Bernoulli polynomial values.
BigInt cycle_poly_bernoulli_by_definition(std::size_t l, std::size_t m, std::size_t n);

/// l! m! [x^l y^m] n! e^{x+y} / (e^x + e^y - e^{x+y})^{n+1}.
BigInt cycle_poly_bernoulli_by_series(std::size_t l, std::size_t m, std::size_t n);

/// Both routes above; throws std::logic_error if they disagree.
BigInt cycle_poly_bernoulli(std::size_t l, std::size_t m, std::size_t n);

/// D_k(m, n) = (-1)^k / k! (1 + sum_{i<k} (-1)^{i+1} / i! C(k, i+1)
///             sum_{j<=i} [i j] B_n^{(-m-j)}(i)).
IdentityCheck cycle_expansion_identity(std::size_t k, std::size_t m, std::size_t n);
bool verify_cycle_expansion_identity(std::size_t k, std::size_t m, std::size_t n);

}  // namespace lonesum

#endif  // LONESUM_SERIES_HPP
