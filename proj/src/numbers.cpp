#include "fano/numbers.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fano {

BigInt binomial(unsigned long a, unsigned long b) {
  if (b > a) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

bool is_power_of_two(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("is_power_of_two requires n >= 1");
  return mpz_popcount(n.get_mpz_t()) == 1;
}

const BigInt& deterministic_primality_bound() {
  // The first 13 primes witness correctly below this bound (Sorenson-Webster).
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

namespace {

// bases 2..41: deterministic below deterministic_primality_bound()
constexpr unsigned long kFixedBases[] = {2,  3,  5,  7,  11, 13, 17,
                                         19, 23, 29, 31, 37, 41};

// One strong-pseudoprime round. n odd, n > 3, n - 1 = q * 2^s.
bool strong_probable_prime(const BigInt& n, const BigInt& base, const BigInt& q,
                           unsigned long s) {
  BigInt a = base % n;
  if (sgn(a) == 0) return true;  // base divisible by n: no information
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
  BigInt n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Primality classify_prime(const BigInt& n) {
  if (n < 2) return Primality::composite;
  for (unsigned long p : kFixedBases) {
    if (n == p) return Primality::prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  }
  if (n < 43 * 43) return Primality::prime;

  BigInt q = n - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  for (unsigned long b : kFixedBases) {
    if (!strong_probable_prime(n, BigInt(b), q, s)) return Primality::composite;
  }
  if (n < deterministic_primality_bound()) return Primality::prime;

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x66616e6fUL);  // fixed seed: the classification is a pure function
  for (int round = 0; round < 64; ++round) {
    BigInt base = 2 + rng.get_z_range(n - 3);
    if (!strong_probable_prime(n, base, q, s)) return Primality::composite;
  }
  return Primality::probably_prime;
}

bool is_prime(const BigInt& n) { return classify_prime(n) != Primality::composite; }

PrimePowerCheck prime_power_check(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("prime_power_check requires n >= 1");
  PrimePowerCheck out;
  if (n == 1) return out;
  unsigned long max_k = mpz_sizeinbase(n.get_mpz_t(), 2);  // floor(log2 n) + 1
  for (unsigned long k = 1; k <= max_k; ++k) {
    BigInt root;
    int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), k);
    if (root < 2) break;
    if (!exact) continue;
    switch (classify_prime(root)) {
      case Primality::prime:
        out.is_prime_power = true;
        return out;
      case Primality::probably_prime:
        out.is_prime_power = true;
        out.probabilistic = true;
        return out;
      case Primality::composite:
        break;
    }
  }
  return out;
}

bool is_one_more_than_prime_power(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("is_one_more_than_prime_power requires n >= 2");
  BigInt m = n - 1;
  if (m < 2) return false;  // m = 1 is p^0 only, excluded
  return prime_power_check(m).is_prime_power;
}

long factorial_two_adic_valuation(long n) {
  if (n < 1) throw std::invalid_argument("factorial_two_adic_valuation requires n >= 1");
  long total = 0;
  for (long q = n / 2; q > 0; q /= 2) total += q;
  return total;
}

Rational harmonic_defect(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("harmonic_defect requires degrees");
  Rational acc(-2);
  for (int d : degrees) {
    if (d < 2) throw std::invalid_argument("harmonic_defect requires every d >= 2");
    Rational h(0), h2(0);
    for (int j = 1; j <= d; ++j) {
      Rational term(1, j);
      term.canonicalize();
      h += term;
      Rational term2(1, static_cast<long>(j) * j);
      term2.canonicalize();
      h2 += term2;
    }
    acc += h * h - h2;
  }
  return acc;
}

}  // namespace fano
