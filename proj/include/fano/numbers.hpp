#ifndef FANO_NUMBERS_HPP
#define FANO_NUMBERS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fano {

/// Exact arbitrary-precision signed integer. Decimal round-trips are lossless.
using BigInt = mpz_class;

/// Exact rational, always reduced, denominator > 0.
using Rational = mpq_class;

/// Exact binomial coefficient C(a, b). Returns 0 when b > a.
BigInt binomial(unsigned long a, unsigned long b);

/// True iff n = 2^a for some a >= 0. Requires n >= 1.
bool is_power_of_two(const BigInt& n);

enum class Primality { composite, prime, probably_prime };

/// Miller-Rabin primality. Deterministic (fixed base set) for
/// n < 3317044064679887385961981; above that, 64 extra rounds and the
/// verdict degrades to probably_prime.
Primality classify_prime(const BigInt& n);

/// Convenience wrapper; probably_prime counts as prime.
bool is_prime(const BigInt& n);

/// Largest bound below which classify_prime is a proof.
const BigInt& deterministic_primality_bound();

struct PrimePowerCheck {
  bool is_prime_power = false;  // n = p^m with m >= 1
  bool probabilistic = false;   // some primality verdict was only "probable"
};

/// Checks n = p^m for a prime p and m >= 1, by integer k-th roots for all
/// k <= log2(n) plus a primality test on each exact root. Requires n >= 1;
/// n = 1 is not a prime power.
PrimePowerCheck prime_power_check(const BigInt& n);

/// True iff n - 1 = p^m for a prime p and m >= 1. Requires n >= 2.
bool is_one_more_than_prime_power(const BigInt& n);

/// v2(n!) by Legendre's formula, sum over i of floor(n / 2^i). Requires n >= 1.
long factorial_two_adic_valuation(long n);

/// The exact value of
///   -2 + sum_i ((1 + 1/2 + ... + 1/d_i)^2 - (1 + 1/4 + ... + 1/d_i^2)),
/// the second-derivative constant of the plane-crossing obstruction.
/// Requires every d_i >= 2.
Rational harmonic_defect(const std::vector<int>& degrees);

}  // namespace fano

#endif
