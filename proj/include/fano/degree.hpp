#ifndef FANO_DEGREE_HPP
#define FANO_DEGREE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fano/catalog.hpp"
#include "fano/numbers.hpp"
#include "fano/polyarith.hpp"

namespace fano {

enum class DegreeMethod { naive, kronecker };

struct DegreeOptions {
  enum class Method { automatic, naive, kronecker };
  Method method = Method::automatic;
  std::optional<long> base_override;
  std::size_t term_limit = 50'000'000;
  int threads = 1;
  // opt-in byte-per-exponent representation for modular runs (modulus <= 255)
  std::size_t dense_modular_slots = 0;
  // estimated-work gate for runs that take hours; lifted by opting in
  bool allow_long_running = false;
  std::optional<std::string> cache_path;
  bool use_cache = true;
};

struct DegreeResult {
  FanoProblem problem;
  BigInt value;
  DegreeMethod method = DegreeMethod::naive;
  std::optional<long> kronecker_base;
  double elapsed_seconds = 0.0;
  std::size_t peak_terms = 0;
  bool from_cache = false;
};

struct ModularDegreeResult {
  FanoProblem problem;
  std::uint64_t residue = 0;
  std::uint64_t modulus = 0;
  long kronecker_base = 0;
  double elapsed_seconds = 0.0;
  std::size_t peak_terms = 0;
};

/// The full factor multiset Q_{r,[d]} * V_r, with the sign-mixing Vandermonde
/// factors interleaved evenly among the composition factors.
std::vector<LinearForm> assemble_factors(const FanoProblem& p);

/// prod_i d_i^(r+1); every exact degree is divisible by it.
BigInt divisibility_certificate(const FanoProblem& p);

bool check_divisibility(const FanoProblem& p, const BigInt& value);

/// Factor count times a live-term bound; the cost model behind method
/// auto-selection and the long-running gate.
double estimate_work(const FanoProblem& p, DegreeMethod method);

/// Work above which a computation needs allow_long_running.
inline constexpr double kLongRunWork = 1e9;

DegreeMethod select_method(const FanoProblem& p, const DegreeOptions& options);

/// The number of r-planes: the coefficient of x_0^n x_1^(n-1) ... x_r^(n-r)
/// in Q_{r,[d]} * V_r. Requires delta = 0 and delta_minus >= 0.
DegreeResult fano_degree(const FanoProblem& p, const DegreeOptions& options = {});

/// The same coefficient mod m, always through the kronecker engine.
ModularDegreeResult fano_degree_mod(const FanoProblem& p, std::uint64_t modulus,
                                    const DegreeOptions& options = {});

/// Append-only JSON-lines degree cache keyed by FanoProblem::key().
struct CacheEntry {
  std::string key;
  BigInt value;
  std::string method;
  std::optional<long> base;
  std::string version;
};

std::optional<CacheEntry> cache_lookup(const std::string& path, const std::string& key);
void cache_append(const std::string& path, const CacheEntry& entry);

}  // namespace fano

#endif
