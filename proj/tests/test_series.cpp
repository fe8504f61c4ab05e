#include <random>

#include "doctest.h"

#include "lonesum/count.hpp"
#include "lonesum/series.hpp"

using namespace lonesum;

namespace {

BiSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  BiSeries f(order);
  for (std::size_t m = 0; m <= order; ++m) {
    for (std::size_t n = 0; m + n <= order; ++n) {
      Rational c(num(rng), den(rng));
      c.canonicalize();
      f.coeff(m, n) = c;
    }
  }
  f.coeff(0, 0) = zero_constant ? Rational(0) : Rational(1);
  return f;
}

// n-th EGF coefficient of sum_M M^2 (1 - e^{-t})^M, expanding each power
// binomially: (1 - e^{-t})^M = sum_j C(M,j) (-1)^j e^{-j t}.
Rational li_star_zero_minus_one(std::size_t n) {
  BigInt total = 0;
  for (std::size_t big = 1; big <= n; ++big) {
    BigInt inner = 0;
    for (std::size_t j = 0; j <= big; ++j) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), j, n);
      // (-1)^j * (-j)^n
      BigInt term = binomial(big, j) * p;
      if ((j + n) % 2 == 1) term = -term;
      inner += term;
    }
    total += BigInt(big * big) * inner;
  }
  return Rational(total);
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("elementary exponentials") {
  CHECK(BiSeries::elementary(0, 0, 6) == BiSeries::constant(1, 6));
  const BiSeries e = BiSeries::elementary(1, 1, 6);
  CHECK(e.coeff(2, 3) == 1);
  const BiSeries g = BiSeries::elementary(2, -3, 6);
  CHECK(g.coeff(2, 3) == Rational(4 * -27));
  const BiSeries den = lonesum_denominator(4);
  CHECK(den.coeff(0, 0) == 1);
  CHECK(den.coeff(1, 1) == -1);
  CHECK(den.coeff(1, 0) == 0);
  CHECK(den.coeff(2, 0) == 0);
  CHECK(den.coeff(0, 3) == 0);
  CHECK(den.coeff(2, 2) == -1);
  CHECK_THROWS_AS(static_cast<void>(den.coeff(3, 2)), std::out_of_range);
}

TEST_CASE("univariate basics") {
  const UniSeries e = UniSeries::exp_linear(Rational(-1), 6);
  CHECK(e.coeff(5) == -1);
  const UniSeries prod = UniSeries::exp_linear(2, 6) * UniSeries::exp_linear(3, 6);
  CHECK(prod == UniSeries::exp_linear(5, 6));
  CHECK(prod.coeff(3) == 125);
}

TEST_CASE("multiplication is a binomial convolution") {
  std::mt19937_64 rng(1);
  const BiSeries f = random_series(rng, 7, false);
  CHECK(f * BiSeries::constant(1, 7) == f);
  CHECK(BiSeries::elementary(1, 2, 7) * BiSeries::elementary(3, -1, 7) ==
        BiSeries::elementary(4, 1, 7));
  const BiSeries g = random_series(rng, 7, true);
  const BiSeries h = random_series(rng, 7, true);
  CHECK(f * (g + h) == f * g + f * h);
  CHECK(f * g == g * f);
  CHECK((f * g).with_order(4) == f.with_order(4) * g.with_order(4));
  CHECK((f * g.with_order(3)).order() == 3);
}

TEST_CASE("reciprocal") {
  std::mt19937_64 rng(2);
  for (std::size_t order : {0u, 1u, 2u, 5u, 9u, 12u}) {
    BiSeries f = random_series(rng, order, false);
    f.coeff(0, 0) = Rational(-3, 2);
    CHECK(f * recip(f) == BiSeries::constant(1, order));
  }
  const BiSeries tilde = recip(lonesum_denominator(10));
  CHECK(tilde == tilde_lonesum_egf(10));
  CHECK(extract(tilde, 1, 1) == 1);
  for (std::size_t m = 0; m <= 10; ++m) {
    for (std::size_t n = 0; m + n <= 10; ++n) {
      CHECK(tilde.coeff(m, n).get_den() == 1);
      CHECK(tilde.coeff(m, n) >= 0);
    }
  }
  CHECK_THROWS_AS(recip(BiSeries(4)), std::domain_error);
}

TEST_CASE("exponential") {
  std::mt19937_64 rng(3);
  for (std::size_t order : {1u, 4u, 8u}) {
    const BiSeries f = random_series(rng, order, true);
    const BiSeries g = exp(f);
    CHECK(euler(g) == euler(f) * g);
    CHECK(g * exp(f * Rational(-1)) == BiSeries::constant(1, order));
    CHECK(g.coeff(0, 0) == 1);
  }
  BiSeries xy(6);
  xy.coeff(1, 0) = 2;
  xy.coeff(0, 1) = -1;
  CHECK(exp(xy) == BiSeries::elementary(2, -1, 6));
  CHECK_THROWS_AS(exp(BiSeries::constant(1, 3)), std::domain_error);
}

TEST_CASE("powers") {
  std::mt19937_64 rng(4);
  const BiSeries f = random_series(rng, 6, false);
  CHECK(pow(f, 0) == BiSeries::constant(1, 6));
  CHECK(pow(f, 1) == f);
  CHECK(pow(f, 5) == f * f * f * f * f);
}

TEST_CASE("order-k generating functions") {
  CHECK(extract(d_k_egf(1, 8), 2, 2) == 13);
  CHECK(extract(d_k_egf(2, 8), 3, 3) == 108);
  CHECK(extract(d_k_egf(3, 8), 2, 2) == 0);
  const BiSeries zero = d_k_egf(0, 8);
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t n = 0; m + n <= 8; ++n) CHECK(extract(zero, m, n) == 1);
  }
  for (std::size_t k = 0; k <= 4; ++k) {
    const BiSeries t = tilde_d_k_egf(k, 8);
    for (std::size_t m = 0; m <= 8; ++m) {
      for (std::size_t n = 0; m + n <= 8; ++n) {
        BigInt expected = 0;
        for (std::size_t i = 0; i <= m; ++i) {
          for (std::size_t j = 0; j <= n; ++j) {
            expected += binomial(m, i) * binomial(n, j) * extract_integer(t, i, j);
          }
        }
        CHECK(expected == d_k(k, m, n));
      }
    }
  }
}

TEST_CASE("total generating function") {
  const BiSeries d = d_egf(10);
  CHECK(extract(d, 3, 3) == 344);
  CHECK(extract(d, 0, 0) == 1);
  CHECK(extract(d, 2, 2) == 16);
  std::vector<BiSeries> by_order;
  for (std::size_t k = 0; k <= 4; ++k) by_order.push_back(d_k_egf(k, 8));
  for (std::size_t m = 0; m <= 8; ++m) {
    for (std::size_t n = 0; m + n <= 8; ++n) {
      Rational sum = 0;
      for (const auto& s : by_order) sum += extract(s, m, n);
      CHECK(sum == extract(d, m, n));
    }
  }
  // exp of the shifted reciprocal matches e^{x+y} sum_k (recip - 1)^k / k!.
  const std::size_t order = 9;
  const BiSeries shifted = tilde_lonesum_egf(order) - BiSeries::constant(1, order);
  BiSeries sum(order);
  BiSeries power = BiSeries::constant(1, order);
  Rational inv_fact = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    sum += power * inv_fact;
    power = power * shifted;
    inv_fact /= Rational(static_cast<long>(k + 1));
  }
  CHECK(d_egf(order) == BiSeries::elementary(1, 1, order) * sum);
}

TEST_CASE("lonesum generating function") {
  const BiSeries l = lonesum_egf(10);
  CHECK(extract(l, 2, 2) == 14);
  for (std::size_t m = 0; m <= 10; ++m) {
    for (std::size_t n = 0; m + n <= 10; ++n) CHECK(extract_integer(l, m, n) == lonesum_count(m, n));
  }
}

TEST_CASE("extract errors") {
  CHECK(extract(BiSeries::constant(1, 0), 0, 0) == 1);
  CHECK_THROWS_AS(extract(BiSeries(3), 2, 2), std::out_of_range);
  BiSeries half(2);
  half.coeff(1, 0) = Rational(1, 2);
  CHECK(extract(half, 1, 0) == Rational(1, 2));
  CHECK_THROWS_AS(extract_integer(half, 1, 0), std::domain_error);
}

TEST_CASE("polylogarithm-star series") {
  for (long m = 0; m <= 6; ++m) {
    const std::vector<long> idx{-m};
    const UniSeries s = li_star_over_z(idx, 8);
    for (std::size_t n = 0; n <= 7; ++n) CHECK(s.coeff(n) == lonesum_count(m, n));
  }
  for (const auto& idx : {std::vector<long>{0}, std::vector<long>{-2, 0, -1}}) {
    CHECK(li_star_series(idx, 6).coeff(0) == 0);
  }
  const std::vector<long> idx{0, -1};
  const UniSeries s = li_star_series(idx, 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(s.coeff(n) == li_star_zero_minus_one(n));
  CHECK_THROWS_AS(li_star_series(std::vector<long>{1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(li_star_series(std::vector<long>{}, 4), std::invalid_argument);
  CHECK_THROWS_AS(li_star_over_z(std::vector<long>{0, 2}, 4), std::invalid_argument);
}

TEST_CASE("poly-Bernoulli-star polynomials") {
  CHECK(multi_pb_star(std::vector<long>{-2}, 0, 2) == 14);
  for (long m = 0; m <= 5; ++m) CHECK(multi_pb_star(std::vector<long>{-m}, 0, 0) == 1);
  // Solve the k = 2, m = n = 2 star identity for its last term using D_2(2,2):
  // 2! D_2(2,2) = 1 - 2 B(-2)(0) + B(0,-2)(1).
  const Rational derived = Rational(2 * d_k(2, 2, 2)) - 1 + 2 * multi_pb_star(std::vector<long>{-2}, 0, 2);
  CHECK(derived == 31);
  CHECK(multi_pb_star(std::vector<long>{0, -2}, 1, 2) == derived);
  for (long m = 0; m <= 8; ++m) {
    for (std::size_t n = 0; n <= 8; ++n) {
      CHECK(multi_pb_star(std::vector<long>{-m}, 0, n) == lonesum_count(m, n));
      CHECK(poly_bernoulli_poly(-m, 0, n) == lonesum_count(m, n));
    }
  }
  CHECK_THROWS_AS(multi_pb_star(std::vector<long>{3}, 0, 2), std::invalid_argument);
}

TEST_CASE("star polynomial identity for D_k") {
  const IdentityCheck c = star_polynomial_identity(1, 2, 2);
  CHECK(c.expected == 13);
  CHECK(c.computed == 13);
  const IdentityCheck zero = star_polynomial_identity(2, 1, 1);
  CHECK(zero.expected == 0);
  CHECK(zero.computed == 0);
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t m = 0; m <= 6; ++m) {
      for (std::size_t n = 0; n <= 6; ++n) CHECK(verify_star_polynomial_identity(k, m, n));
    }
  }
}

TEST_CASE("Stirling-cycle sums of poly-Bernoulli polynomials") {
  for (std::size_t l = 0; l <= 5; ++l) {
    for (std::size_t m = 0; m <= 5; ++m) CHECK(cycle_poly_bernoulli(l, m, 0) == lonesum_count(l, m));
  }
  CHECK(cycle_poly_bernoulli(2, 2, 0) == 14);
  CHECK(cycle_poly_bernoulli_by_definition(1, 1, 1) == cycle_poly_bernoulli_by_series(1, 1, 1));
  for (std::size_t l = 0; l <= 6; ++l) {
    CHECK(cycle_poly_bernoulli_by_definition(l, 0, 3) == cycle_poly_bernoulli_by_series(l, 0, 3));
  }
  for (std::size_t l = 0; l <= 6; ++l) {
    for (std::size_t m = 0; m <= 6; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(cycle_poly_bernoulli_by_definition(l, m, n) == cycle_poly_bernoulli_by_series(l, m, n));
      }
    }
  }
}

TEST_CASE("cycle expansion identity for D_k") {
  const IdentityCheck c = cycle_expansion_identity(1, 2, 2);
  CHECK(c.expected == 13);
  CHECK(c.computed == 13);
  CHECK(verify_cycle_expansion_identity(3, 2, 5));
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t m = 0; m <= 6; ++m) {
      for (std::size_t n = 0; n <= 6; ++n) CHECK(verify_cycle_expansion_identity(k, m, n));
    }
  }
}

}  // TEST_SUITE
