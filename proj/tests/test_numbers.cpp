#include "fano/numbers.hpp"

#include <vector>

#include "doctest.h"

using fano::BigInt;
using fano::Rational;

namespace {

// Independent oracle: p^m with m >= 1, by trial division.
bool prime_power_by_factorization(long n) {
  if (n < 2) return false;
  long p = 0;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(fano::binomial(21, 18) == 1330);
  CHECK(fano::binomial(9, 6) == 84);
  CHECK(fano::binomial(5, 0) == 1);
  CHECK(fano::binomial(3, 7) == 0);
  CHECK(fano::binomial(0, 0) == 1);
}

TEST_CASE("binomial satisfies Pascal's rule exhaustively for a <= 30") {
  for (unsigned long a = 1; a <= 30; ++a) {
    for (unsigned long b = 1; b <= a; ++b) {
      CHECK(fano::binomial(a, b) == fano::binomial(a - 1, b - 1) + fano::binomial(a - 1, b));
    }
  }
}

TEST_CASE("is_power_of_two") {
  CHECK(fano::is_power_of_two(BigInt(16)));
  CHECK(fano::is_power_of_two(BigInt(1)));
  CHECK_FALSE(fano::is_power_of_two(BigInt(27)));
  CHECK_FALSE(fano::is_power_of_two(BigInt(2875)));
  CHECK(fano::is_power_of_two(BigInt(1) << 100));
  CHECK_THROWS_AS(fano::is_power_of_two(BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(fano::is_power_of_two(BigInt(-4)), std::invalid_argument);
}

TEST_CASE("primality spot checks") {
  CHECK(fano::classify_prime(BigInt(2)) == fano::Primality::prime);
  CHECK(fano::classify_prime(BigInt(479)) == fano::Primality::prime);
  CHECK(fano::classify_prime(BigInt(2874)) == fano::Primality::composite);
  CHECK(fano::classify_prime(BigInt(1)) == fano::Primality::composite);
  // strong pseudoprime to bases 2,3,5,7 (= 151 * 751 * 28351)
  CHECK(fano::classify_prime(BigInt("3215031751")) == fano::Primality::composite);
  // Mersenne prime 2^89 - 1 exceeds the deterministic bound
  BigInt m89 = (BigInt(1) << 89) - 1;
  CHECK(fano::classify_prime(m89) == fano::Primality::probably_prime);
  CHECK(fano::is_prime(m89));
}

TEST_CASE("primality agrees with trial division up to 20000") {
  auto sieve_prime = [](long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (long n = 0; n <= 20000; ++n) {
    CHECK(fano::is_prime(BigInt(n)) == sieve_prime(n));
  }
}

TEST_CASE("prime power detection") {
  CHECK(fano::prime_power_check(BigInt(27)).is_prime_power);
  CHECK(fano::prime_power_check(BigInt(16)).is_prime_power);
  CHECK_FALSE(fano::prime_power_check(BigInt(1)).is_prime_power);
  CHECK_FALSE(fano::prime_power_check(BigInt(12)).is_prime_power);
  CHECK_FALSE(fano::prime_power_check(BigInt(2874)).is_prime_power);  // 2 * 3 * 479
}

TEST_CASE("is_one_more_than_prime_power examples") {
  CHECK(fano::is_one_more_than_prime_power(BigInt(28)));  // 27 = 3^3
  CHECK(fano::is_one_more_than_prime_power(BigInt(17)));  // 16 = 2^4
  CHECK_FALSE(fano::is_one_more_than_prime_power(BigInt(2875)));
  CHECK_FALSE(fano::is_one_more_than_prime_power(BigInt(2)));  // 1 is not p^m
  CHECK_THROWS_AS(fano::is_one_more_than_prime_power(BigInt(1)), std::invalid_argument);
}

TEST_CASE("is_one_more_than_prime_power agrees with factorization for N <= 1e5") {
  for (long n = 2; n <= 100000; ++n) {
    bool expected = prime_power_by_factorization(n - 1);
    CHECK(fano::is_one_more_than_prime_power(BigInt(n)) == expected);
  }
}

TEST_CASE("factorial two-adic valuation") {
  CHECK(fano::factorial_two_adic_valuation(5) == 3);   // 120 = 8 * 15
  CHECK(fano::factorial_two_adic_valuation(7) == 4);
  CHECK(fano::factorial_two_adic_valuation(1) == 0);
  CHECK_THROWS_AS(fano::factorial_two_adic_valuation(0), std::invalid_argument);

  // v2(n!) = n - s2(n) <= n - 1, with equality exactly at powers of two
  for (long n = 2; n <= 10000; ++n) {
    long v = fano::factorial_two_adic_valuation(n);
    CHECK(v <= n - 1);
    CHECK((v == n - 1) == fano::is_power_of_two(BigInt(n)));
  }
  // in particular v2((2k+3)!) < 2k+2 for k <= 100
  for (long k = 1; k <= 100; ++k) {
    CHECK(fano::factorial_two_adic_valuation(2 * k + 3) < 2 * k + 2);
  }
}

TEST_CASE("factorial valuation matches direct factorization for small n") {
  BigInt fact(1);
  long v_expected = 0;
  for (long n = 1; n <= 40; ++n) {
    fact *= n;
    long m = n;
    while (m % 2 == 0) {
      ++v_expected;
      m /= 2;
    }
    CHECK(fano::factorial_two_adic_valuation(n) == v_expected);
    CHECK(mpz_scan1(fact.get_mpz_t(), 0) == static_cast<unsigned long>(v_expected));
  }
}

TEST_CASE("harmonic defect frozen values") {
  CHECK(fano::harmonic_defect({2}) == Rational(-1));   // -2 + (9/4 - 5/4)
  CHECK(fano::harmonic_defect({3}) == Rational(0));    // -2 + (121/36 - 49/36)
  CHECK(fano::harmonic_defect({2, 2}) == Rational(0));
  CHECK_THROWS_AS(fano::harmonic_defect({1}), std::invalid_argument);
}

TEST_CASE("harmonic defect is negative exactly at (2), s <= 4, d <= 12") {
  // exhaustive over nondecreasing tuples
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (!cur.empty()) tuples.push_back(cur);
    if (static_cast<int>(cur.size()) == 4) return;
    for (int d = lo; d <= 12; ++d) {
      cur.push_back(d);
      self(self, d);
      cur.pop_back();
    }
  };
  rec(rec, 2);
  CHECK(tuples.size() == 11 + 66 + 286 + 1001);
  for (const auto& t : tuples) {
    Rational v = fano::harmonic_defect(t);
    bool is_single_quadric = (t.size() == 1 && t[0] == 2);
    CHECK((sgn(v) < 0) == is_single_quadric);
  }
}

TEST_CASE("rationals from harmonic defect are canonical") {
  Rational v = fano::harmonic_defect({4, 7});
  CHECK(sgn(v.get_den()) > 0);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  CHECK(g == 1);
}
