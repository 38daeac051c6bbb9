#ifndef FANO_RINGS_HPP
#define FANO_RINGS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fano/numbers.hpp"

namespace fano {

/// Exact integer coefficients.
struct ExactRing {
  using value_type = BigInt;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_long(long a) const { return value_type(a); }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }

  // acc += c * a, a a small machine integer
  void add_scaled(value_type& acc, const value_type& c, long a) const {
    if (a >= 0) {
      mpz_addmul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(a));
    } else {
      mpz_submul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-a));
    }
  }

  void add_assign(value_type& acc, const value_type& v) const { acc += v; }

  // acc += a * b
  void mul_add(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }

  std::string str(const value_type& v) const { return v.get_str(); }
};

/// Integers modulo m, 2 <= m <= 2^63. Values live in [0, m).
class ModularRing {
 public:
  using value_type = std::uint64_t;

  explicit ModularRing(std::uint64_t modulus) : m_(modulus) {
    if (m_ < 2) throw std::invalid_argument("modulus must be >= 2");
    if (m_ > (std::uint64_t{1} << 63))
      throw std::invalid_argument("modulus must fit in 63 bits");
  }

  std::uint64_t modulus() const { return m_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % m_; }
  bool is_zero(value_type v) const { return v == 0; }

  value_type from_long(long a) const {
    long rem = a % static_cast<long>(m_);
    if (rem < 0) rem += static_cast<long>(m_);
    return static_cast<value_type>(rem);
  }

  void add_scaled(value_type& acc, value_type c, long a) const {
    unsigned __int128 t = acc;
    t += static_cast<unsigned __int128>(c) * from_long(a);
    acc = static_cast<value_type>(t % m_);
  }

  void add_assign(value_type& acc, value_type v) const {
    acc += v;  // both < m <= 2^63, no overflow
    if (acc >= m_) acc -= m_;
  }

  void mul_add(value_type& acc, value_type a, value_type b) const {
    unsigned __int128 t = acc;
    t += static_cast<unsigned __int128>(a) * b;
    acc = static_cast<value_type>(t % m_);
  }

  std::string str(value_type v) const { return std::to_string(v); }

 private:
  std::uint64_t m_;
};

}  // namespace fano

#endif
