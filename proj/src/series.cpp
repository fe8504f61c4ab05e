#include "lonesum/series.hpp"

#include <algorithm>
#include <string>

namespace lonesum {

namespace {

Rational as_rational(const BigInt& z) { return Rational(z); }

Rational sign(std::size_t exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

BigInt require_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) {
    throw std::domain_error(std::string(what) + ": non-integral value " + q.get_str());
  }
  return q.get_num();
}

// z = 1 - e^{-t}.
UniSeries one_minus_exp_neg(std::size_t order) {
  UniSeries z(order);
  for (std::size_t n = 1; n <= order; ++n) z.coeff(n) = sign(n + 1);
  return z;
}

// Weights w(M) = sum_{m_1 <= ... <= m_{r-1} <= M} prod m_i^{-k_i} * M^{-k_r}
// for M = 0..limit (w(0) = 0).
std::vector<BigInt> li_star_weights(std::span<const long> indices, std::size_t limit) {
  if (indices.empty()) throw std::invalid_argument("li_star: empty index list");
  for (const long k : indices) {
    if (k > 0) throw std::invalid_argument("li_star: positive indices are not supported");
  }
  const auto power = [](std::size_t base, long neg_index) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(-neg_index));
    return p;
  };
  std::vector<BigInt> w(limit + 1, BigInt(0));
  for (std::size_t M = 1; M <= limit; ++M) w[M] = power(M, indices[0]);
  for (std::size_t s = 1; s < indices.size(); ++s) {
    BigInt prefix = 0;
    std::vector<BigInt> next(limit + 1, BigInt(0));
    for (std::size_t M = 1; M <= limit; ++M) {
      prefix += w[M];
      next[M] = prefix * power(M, indices[s]);
    }
    w = std::move(next);
  }
  return w;
}

}  // namespace

// ---------------------------------------------------------------- UniSeries

UniSeries::UniSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

UniSeries UniSeries::constant(const Rational& c, std::size_t order) {
  UniSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

UniSeries UniSeries::exp_linear(const Rational& a, std::size_t order) {
  UniSeries s(order);
  Rational power = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    s.coeffs_[n] = power;
    power *= a;
  }
  return s;
}

UniSeries& UniSeries::operator+=(const UniSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

UniSeries& UniSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const auto table = CountTable::shared(order);
  UniSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Rational sum = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      sum += as_rational(table->binomial(n, i)) * a.coeffs_[i] * b.coeffs_[n - i];
    }
    out.coeffs_[n] = sum;
  }
  return out;
}

// ----------------------------------------------------------------- BiSeries

BiSeries::BiSeries(std::size_t order) : order_(order), coeffs_(order + 1) {
  for (std::size_t m = 0; m <= order; ++m) coeffs_[m].assign(order - m + 1, Rational(0));
}

BiSeries BiSeries::constant(const Rational& c, std::size_t order) {
  BiSeries s(order);
  s.coeffs_[0][0] = c;
  return s;
}

BiSeries BiSeries::elementary(long a, long b, std::size_t order) {
  BiSeries s(order);
  BigInt am = 1;
  for (std::size_t m = 0; m <= order; ++m) {
    BigInt bn = 1;
    for (std::size_t n = 0; m + n <= order; ++n) {
      s.coeffs_[m][n] = Rational(am * bn);
      bn *= b;
    }
    am *= a;
  }
  return s;
}

const Rational& BiSeries::coeff(std::size_t m, std::size_t n) const {
  if (m + n > order_) throw std::out_of_range("BiSeries: coefficient beyond truncation order");
  return coeffs_[m][n];
}

Rational& BiSeries::coeff(std::size_t m, std::size_t n) {
  if (m + n > order_) throw std::out_of_range("BiSeries: coefficient beyond truncation order");
  return coeffs_[m][n];
}

BiSeries BiSeries::with_order(std::size_t order) const {
  BiSeries s(order);
  const std::size_t common = std::min(order, order_);
  for (std::size_t m = 0; m <= common; ++m) {
    for (std::size_t n = 0; m + n <= common; ++n) s.coeffs_[m][n] = coeffs_[m][n];
  }
  return s;
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
  if (other.order_ < order_) *this = with_order(other.order_);
  for (std::size_t m = 0; m <= order_; ++m) {
    for (std::size_t n = 0; m + n <= order_; ++n) coeffs_[m][n] += other.coeffs_[m][n];
  }
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
  if (other.order_ < order_) *this = with_order(other.order_);
  for (std::size_t m = 0; m <= order_; ++m) {
    for (std::size_t n = 0; m + n <= order_; ++n) coeffs_[m][n] -= other.coeffs_[m][n];
  }
  return *this;
}

BiSeries& BiSeries::operator*=(const Rational& scalar) {
  for (auto& row : coeffs_) {
    for (auto& c : row) c *= scalar;
  }
  return *this;
}

BiSeries operator*(const BiSeries& f, const BiSeries& g) {
  const std::size_t order = std::min(f.order_, g.order_);
  const auto table = CountTable::shared(order);
  BiSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; i + j <= order; ++j) {
      const Rational& fij = f.coeffs_[i][j];
      if (sgn(fij) == 0) continue;
      for (std::size_t m = i; m <= order; ++m) {
        const Rational left = fij * as_rational(table->binomial(m, i));
        for (std::size_t n = j; m + n <= order; ++n) {
          const Rational& gv = g.coeffs_[m - i][n - j];
          if (sgn(gv) == 0) continue;
          out.coeffs_[m][n] += left * as_rational(table->binomial(n, j)) * gv;
        }
      }
    }
  }
  return out;
}

BiSeries recip(const BiSeries& f) {
  const Rational& c0 = f.coeff(0, 0);
  if (sgn(c0) == 0) throw std::domain_error("recip: zero constant term");
  BiSeries g = BiSeries::constant(Rational(1) / c0, 0);
  std::size_t precision = 0;
  while (precision < f.order()) {
    precision = std::min(2 * precision + 1, f.order());
    const BiSeries fp = f.with_order(precision);
    const BiSeries gp = g.with_order(precision);
    g = gp * (BiSeries::constant(2, precision) - fp * gp);
  }
  return g;
}

BiSeries exp(const BiSeries& f) {
  if (sgn(f.coeff(0, 0)) != 0) throw std::domain_error("exp: nonzero constant term");
  const std::size_t order = f.order();
  const auto table = CountTable::shared(order);
  BiSeries g = BiSeries::constant(1, order);
  for (std::size_t d = 1; d <= order; ++d) {
    for (std::size_t m = 0; m <= d; ++m) {
      const std::size_t n = d - m;
      Rational sum = 0;
      for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
          if (i + j == 0) continue;
          const Rational& fij = f.coeff(i, j);
          if (sgn(fij) == 0) continue;
          sum += Rational(static_cast<long>(i + j)) * as_rational(table->binomial(m, i)) *
                 as_rational(table->binomial(n, j)) * fij * g.coeff(m - i, n - j);
        }
      }
      g.coeff(m, n) = sum / static_cast<long>(d);
    }
  }
  return g;
}

BiSeries pow(const BiSeries& f, std::size_t k) {
  BiSeries result = BiSeries::constant(1, f.order());
  BiSeries base = f;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

BiSeries euler(const BiSeries& f) {
  BiSeries out(f.order());
  for (std::size_t m = 0; m <= f.order(); ++m) {
    for (std::size_t n = 0; m + n <= f.order(); ++n) {
      out.coeff(m, n) = f.coeff(m, n) * static_cast<long>(m + n);
    }
  }
  return out;
}

Rational extract(const BiSeries& f, std::size_t m, std::size_t n) { return f.coeff(m, n); }

BigInt extract_integer(const BiSeries& f, std::size_t m, std::size_t n) {
  return require_integer(extract(f, m, n), "extract_integer");
}

BiSeries lonesum_denominator(std::size_t order) {
  return BiSeries::elementary(1, 0, order) + BiSeries::elementary(0, 1, order) -
         BiSeries::elementary(1, 1, order);
}

BiSeries tilde_lonesum_egf(std::size_t order) { return recip(lonesum_denominator(order)); }

BiSeries lonesum_egf(std::size_t order) {
  return BiSeries::elementary(1, 1, order) * tilde_lonesum_egf(order);
}

BiSeries tilde_d_k_egf(std::size_t k, std::size_t order) {
  const BiSeries shifted = tilde_lonesum_egf(order) - BiSeries::constant(1, order);
  return pow(shifted, k) * (Rational(1) / as_rational(factorial(k)));
}

BiSeries d_k_egf(std::size_t k, std::size_t order) {
  return BiSeries::elementary(1, 1, order) * tilde_d_k_egf(k, order);
}

BiSeries d_egf(std::size_t order) {
  BiSeries exponent = tilde_lonesum_egf(order) - BiSeries::constant(1, order);
  exponent.coeff(0, 0) = 0;
  if (order >= 1) {
    exponent.coeff(1, 0) += 1;
    exponent.coeff(0, 1) += 1;
  }
  return exp(exponent);
}

UniSeries li_star_series(std::span<const long> indices, std::size_t order) {
  const auto w = li_star_weights(indices, order);
  const UniSeries z = one_minus_exp_neg(order);
  UniSeries sum(order);
  UniSeries zpow = UniSeries::constant(1, order);
  for (std::size_t M = 1; M <= order; ++M) {
    zpow = zpow * z;
    sum += zpow * as_rational(w[M]);
  }
  return sum;
}

UniSeries li_star_over_z(std::span<const long> indices, std::size_t order) {
  const auto w = li_star_weights(indices, order + 1);
  const UniSeries z = one_minus_exp_neg(order);
  UniSeries sum(order);
  UniSeries zpow = UniSeries::constant(1, order);
  for (std::size_t M = 1; M <= order + 1; ++M) {
    if (M > 1) zpow = zpow * z;
    sum += zpow * as_rational(w[M]);
  }
  return sum;
}

Rational multi_pb_star(std::span<const long> indices, const Rational& x0, std::size_t n) {
  const UniSeries s = UniSeries::exp_linear(-x0, n) * li_star_over_z(indices, n);
  return s.coeff(n);
}

Rational poly_bernoulli_poly(long index, const Rational& x0, std::size_t n) {
  const long indices[] = {index};
  return multi_pb_star(indices, x0, n);
}

IdentityCheck star_polynomial_identity(std::size_t k, std::size_t m, std::size_t n) {
  Rational sum = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<long> indices(i - 1, 0);
    indices.push_back(-static_cast<long>(m));
    sum += as_rational(binomial(k, i)) * sign(i) *
           multi_pb_star(indices, Rational(static_cast<long>(i - 1)), n);
  }
  IdentityCheck check;
  check.expected = as_rational(d_k(k, m, n));
  check.computed = sign(k) * sum / as_rational(factorial(k));
  return check;
}

bool verify_star_polynomial_identity(std::size_t k, std::size_t m, std::size_t n) {
  return star_polynomial_identity(k, m, n).holds();
}

BigInt cycle_poly_bernoulli_by_definition(std::size_t l, std::size_t m, std::size_t n) {
  Rational sum = 0;
  const Rational x0(static_cast<long>(n));
  for (std::size_t j = 0; j <= n; ++j) {
    const BigInt cycles = stirling1u(n, j);
    if (cycles == 0) continue;
    sum += as_rational(cycles) * poly_bernoulli_poly(-static_cast<long>(l + j), x0, m);
  }
  return require_integer(sum, "cycle_poly_bernoulli_by_definition");
}

BigInt cycle_poly_bernoulli_by_series(std::size_t l, std::size_t m, std::size_t n) {
  const std::size_t order = l + m;
  const BiSeries f = BiSeries::elementary(1, 1, order) * pow(tilde_lonesum_egf(order), n + 1) *
                     as_rational(factorial(n));
  return extract_integer(f, l, m);
}

BigInt cycle_poly_bernoulli(std::size_t l, std::size_t m, std::size_t n) {
  BigInt by_definition = cycle_poly_bernoulli_by_definition(l, m, n);
  const BigInt by_series = cycle_poly_bernoulli_by_series(l, m, n);
  if (by_definition != by_series) {
    throw std::logic_error("cycle_poly_bernoulli: routes disagree at (" + std::to_string(l) +
                           "," + std::to_string(m) + "," + std::to_string(n) +
                           "): " + by_definition.get_str() + " vs " + by_series.get_str());
  }
  return by_definition;
}

IdentityCheck cycle_expansion_identity(std::size_t k, std::size_t m, std::size_t n) {
  Rational sum = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Rational inner = 0;
    const Rational x0(static_cast<long>(i));
    for (std::size_t j = 0; j <= i; ++j) {
      inner += as_rational(stirling1u(i, j)) *
               poly_bernoulli_poly(-static_cast<long>(m + j), x0, n);
    }
    sum += sign(i + 1) / as_rational(factorial(i)) * as_rational(binomial(k, i + 1)) * inner;
  }
  IdentityCheck check;
  check.expected = as_rational(d_k(k, m, n));
  check.computed = sign(k) * sum / as_rational(factorial(k));
  return check;
}

bool verify_cycle_expansion_identity(std::size_t k, std::size_t m, std::size_t n) {
  return cycle_expansion_identity(k, m, n).holds();
}

}  // namespace lonesum
