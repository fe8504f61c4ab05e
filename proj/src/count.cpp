#include "lonesum/count.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lonesum {

namespace {

const CountTable& table_for(std::size_t n, std::shared_ptr<const CountTable>& hold) {
  hold = CountTable::shared(n);
  return *hold;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// grid[k][m][n] = D_k(m, n) for k <= k_max, m, n <= size.
using Grid = std::vector<std::vector<std::vector<BigInt>>>;

Grid d_grid(std::size_t k_max, std::size_t size) {
  Grid g(k_max + 1, std::vector<std::vector<BigInt>>(size + 1, std::vector<BigInt>(size + 1)));
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t m = 0; m <= size; ++m) {
      for (std::size_t n = m; n <= size; ++n) {
        g[k][m][n] = d_k(k, m, n);
        g[k][n][m] = g[k][m][n];
      }
    }
  }
  return g;
}

}  // namespace

CountTable::CountTable(std::size_t capacity) : capacity_(capacity) {
  const std::size_t size = capacity + 1;
  stirling2_.assign(size, std::vector<BigInt>(size));
  stirling1u_.assign(size, std::vector<BigInt>(size));
  binomial_.assign(size, std::vector<BigInt>(size));
  factorial_.assign(size, BigInt(1));

  stirling2_[0][0] = 1;
  stirling1u_[0][0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      stirling2_[n][k] = stirling2_[n - 1][k - 1] + BigInt(static_cast<unsigned long>(k)) *
                                                        stirling2_[n - 1][k];
      stirling1u_[n][k] = stirling1u_[n - 1][k - 1] + BigInt(static_cast<unsigned long>(n - 1)) *
                                                          stirling1u_[n - 1][k];
    }
  }
  for (std::size_t n = 0; n < size; ++n) {
    binomial_[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) binomial_[n][k] = binomial_[n - 1][k - 1] + binomial_[n - 1][k];
    if (n > 0) factorial_[n] = factorial_[n - 1] * static_cast<unsigned long>(n);
  }
}

std::shared_ptr<const CountTable> CountTable::shared(std::size_t capacity) {
  static std::mutex mutex;
  static std::shared_ptr<const CountTable> current;
  std::lock_guard lock(mutex);
  if (!current || current->capacity() < capacity) {
    const std::size_t grown = std::max({capacity, std::size_t{64},
                                        current ? 2 * current->capacity() : std::size_t{0}});
    current = std::make_shared<const CountTable>(grown);
  }
  return current;
}

void CountTable::check(std::size_t n) const {
  if (n > capacity_) {
    throw std::out_of_range("CountTable: argument " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(capacity_));
  }
}

const BigInt& CountTable::stirling2(std::size_t n, std::size_t k) const {
  check(n);
  return k > n ? zero_ : stirling2_[n][k];
}

const BigInt& CountTable::stirling1u(std::size_t n, std::size_t k) const {
  check(n);
  return k > n ? zero_ : stirling1u_[n][k];
}

const BigInt& CountTable::binomial(std::size_t n, std::size_t k) const {
  check(n);
  return k > n ? zero_ : binomial_[n][k];
}

const BigInt& CountTable::factorial(std::size_t n) const {
  check(n);
  return factorial_[n];
}

BigInt stirling2(std::size_t n, std::size_t k) {
  std::shared_ptr<const CountTable> hold;
  return table_for(n, hold).stirling2(n, k);
}

BigInt stirling1u(std::size_t n, std::size_t k) {
  std::shared_ptr<const CountTable> hold;
  return table_for(n, hold).stirling1u(n, k);
}

BigInt binomial(std::size_t n, std::size_t k) {
  std::shared_ptr<const CountTable> hold;
  return table_for(n, hold).binomial(n, k);
}

BigInt factorial(std::size_t n) {
  std::shared_ptr<const CountTable> hold;
  return table_for(n, hold).factorial(n);
}

BigInt lonesum_count(std::size_t m, std::size_t n) {
  std::shared_ptr<const CountTable> hold;
  const auto& t = table_for(std::max(m, n) + 1, hold);
  BigInt sum = 0;
  for (std::size_t j = 0; j <= std::min(m, n); ++j) {
    sum += t.factorial(j) * t.factorial(j) * t.stirling2(m + 1, j + 1) * t.stirling2(n + 1, j + 1);
  }
  return sum;
}

BigInt tilde_lonesum_count(std::size_t m, std::size_t n) {
  BigInt sum = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      BigInt term = binomial(m, i) * binomial(n, j) * lonesum_count(i, j);
      if ((m - i + n - j) % 2 == 1) term = -term;
      sum += term;
    }
  }
  return sum;
}

BigInt poly_bernoulli_neg(std::size_t m, std::size_t n) {
  std::shared_ptr<const CountTable> hold;
  const auto& t = table_for(n, hold);
  BigInt sum = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), j + 1, m);
    BigInt term = t.factorial(j) * t.stirling2(n, j) * power;
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return n % 2 == 1 ? BigInt(-sum) : sum;
}

BigInt d_k(std::size_t k, std::size_t m, std::size_t n) {
  if (k == 0) return 1;
  const std::size_t top = std::min(m, n);
  if (k > top) return 0;
  std::shared_ptr<const CountTable> hold;
  const auto& t = table_for(std::max(m, n) + 1, hold);
  BigInt sum = 0;
  for (std::size_t j = k; j <= top; ++j) {
    sum += t.binomial(j - 1, k - 1) * t.factorial(j) * t.factorial(j) * t.stirling2(m + 1, j + 1) *
           t.stirling2(n + 1, j + 1);
  }
  const BigInt& divisor = t.factorial(k);
  if (!mpz_divisible_p(sum.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error("d_k: sum not divisible by k!");
  }
  BigInt result;
  mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), divisor.get_mpz_t());
  return result;
}

BigInt d_total(std::size_t m, std::size_t n) {
  BigInt sum = 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) sum += d_k(k, m, n);
  return sum;
}

RecurrenceSides recurrence_sides(std::size_t k, std::size_t m, std::size_t n) {
  if (k == 0) throw std::invalid_argument("recurrence requires k >= 1");
  RecurrenceSides sides;
  sides.lhs = d_k(k, m + 1, n);
  sides.rhs = d_k(k, m, n);
  const BigInt k_minus_1(static_cast<unsigned long>(k - 1));
  for (std::size_t l = 0; l < n; ++l) {
    sides.rhs += binomial(n, l) * (k_minus_1 * d_k(k, m, l) + d_k(k - 1, m, l) + d_k(k, m, l + 1));
  }
  return sides;
}

bool recurrence_check(std::size_t k, std::size_t m, std::size_t n) {
  return recurrence_sides(k, m, n).holds();
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p;
  std::int64_t r1 = a % p;
  if (r1 < 0) r1 += p;
  std::int64_t s0 = 0;
  std::int64_t s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
  s0 %= p;
  return s0 < 0 ? s0 + p : s0;
}

std::int64_t mod_of(const BigInt& value, std::int64_t p) {
  return static_cast<std::int64_t>(mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p)));
}

CongruenceReport congruence_report(std::uint64_t p, std::size_t k_max, std::size_t mn_max) {
  require_prime(p);
  const auto prime = static_cast<std::int64_t>(p);
  const std::size_t period = p - 1;
  const std::size_t size = std::max<std::size_t>(mn_max, p);
  const Grid d = d_grid(k_max, size);

  CongruenceReport report;
  report.p = p;
  const auto record = [&](const char* rule, std::size_t k, std::size_t m, std::size_t n,
                          std::int64_t expected, std::int64_t actual) {
    ++report.checks;
    if (expected != actual) {
      report.violations.push_back({rule, k, m, n, BigInt(static_cast<long>(expected)),
                                   BigInt(static_cast<long>(actual))});
    }
  };

  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t m = 1; m <= mn_max; ++m) {
      for (std::size_t n = 1; n <= mn_max; ++n) {
        const std::int64_t here = mod_of(d[k][m][n], prime);
        if (k >= p) record("vanishing", k, m, n, 0, here);
        if (m + period <= mn_max) {
          record("periodicity", k, m + period, n, here, mod_of(d[k][m + period][n], prime));
        }
        if (n + period <= mn_max) {
          record("periodicity", k, m, n + period, here, mod_of(d[k][m][n + period], prime));
        }
      }
    }

    for (std::size_t n = 1; n <= mn_max; ++n) {
      if (p > k) {
        std::int64_t expected = 0;
        if (n % period == 0) {
          const std::int64_t inv = mod_inverse(mod_of(factorial(k - 1), prime), prime);
          expected = (k - 1) % 2 == 0 ? inv : (prime - inv) % prime;
        }
        record("row_p_minus_1", k, p - 1, n, expected, mod_of(d[k][p - 1][n], prime));
      }
      const std::int64_t expected =
          k == 1 ? (mod_pow(2, n, prime) - 1 + prime) % prime : 0;
      record("row_p", k, p, n, expected, mod_of(d[k][p][n], prime));
    }
  }
  return report;
}

CongruenceReport stirling_lemma_report(std::uint64_t p, std::size_t range) {
  require_prime(p);
  const auto prime = static_cast<std::int64_t>(p);
  const std::size_t period = p - 1;
  std::shared_ptr<const CountTable> hold;
  const auto& t = table_for(std::max<std::size_t>(range, p), hold);

  CongruenceReport report;
  report.p = p;
  const auto record = [&](const char* rule, std::size_t i, std::size_t m, std::size_t n,
                          const BigInt& expected, const BigInt& actual) {
    ++report.checks;
    if (expected != actual) report.violations.push_back({rule, i, m, n, expected, actual});
  };

  for (std::size_t m = 1; m + period <= range; ++m) {
    for (std::size_t i = 0; i <= p; ++i) {
      record("stirling_periodicity", i, m, m + period,
             BigInt(static_cast<long>(mod_of(t.stirling2(m, i), prime))),
             BigInt(static_cast<long>(mod_of(t.stirling2(m + period, i), prime))));
    }
  }
  for (std::size_t i = 2; i + 1 <= p; ++i) {
    record("stirling_prime_row", i, p, 0, BigInt(0),
           BigInt(static_cast<long>(mod_of(t.stirling2(p, i), prime))));
  }
  for (std::size_t m = 1; m <= range; ++m) {
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, m - 1);
    expected -= 1;
    record("stirling_closed_form", 2, m, 0, expected, t.stirling2(m, 2));
  }
  return report;
}

bool stirling_lemma_check(std::uint64_t p, std::size_t range) {
  return stirling_lemma_report(p, range).ok();
}

}  // namespace lonesum
