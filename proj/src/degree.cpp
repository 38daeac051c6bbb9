#include "fano/degree.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "fano/version.hpp"
#include "json.hpp"

namespace fano {

namespace {

void require_finite_problem(const FanoProblem& p) {
  if (expected_dimension(p) != 0 || delta_minus(p) < 0) {
    throw std::invalid_argument("not a finite Fano problem: " + p.key() +
                                " needs delta = 0 and delta_minus >= 0");
  }
}

double factor_count(const FanoProblem& p) {
  double total = 0;
  for (int d : p.degrees.values()) {
    total += binomial(static_cast<unsigned long>(d) + p.r, p.r).get_d();
  }
  total += binomial(p.r + 1, 2).get_d();
  return total;
}

// Product of the per-variable cap sizes; the naive engine's key space.
double key_capacity(const FanoProblem& p) {
  double cap = 1;
  for (int i = 0; i <= p.r; ++i) {
    cap *= static_cast<double>(p.n - i + 1);
    if (!std::isfinite(cap)) return cap;
  }
  return cap;
}

std::vector<int> canonical_target(const FanoProblem& p) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(p.r) + 1);
  for (int i = 0; i <= p.r; ++i) t.push_back(p.n - i);
  return t;
}

void gate_long_running(const FanoProblem& p, DegreeMethod method,
                       const DegreeOptions& options) {
  double work = estimate_work(p, method);
  if (work > kLongRunWork && !options.allow_long_running) {
    throw std::invalid_argument(
        p.key() + " is a long computation (estimated work " +
        std::to_string(work) + "); enable the long-running option to proceed");
  }
}

void audit_exact_value(const FanoProblem& p, const BigInt& value, bool cached) {
  if (sgn(value) <= 0) {
    throw std::logic_error((cached ? "cached" : "computed") + std::string(" degree for ") +
                           p.key() + " is not positive");
  }
  if (!check_divisibility(p, value)) {
    std::string hint = cached ? "; the cache file looks corrupted, retry without it"
                              : "";
    throw std::logic_error("degree for " + p.key() +
                           " fails the divisibility invariant" + hint);
  }
}

}  // namespace

std::vector<LinearForm> assemble_factors(const FanoProblem& p) {
  std::vector<LinearForm> q;
  for (int d : p.degrees.values()) {
    auto part = q_factors(p.r, d);
    q.insert(q.end(), part.begin(), part.end());
  }
  return interleave_evenly(q, vandermonde_factors(p.r));
}

BigInt divisibility_certificate(const FanoProblem& p) {
  BigInt out(1);
  for (int d : p.degrees.values()) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(p.r) + 1);
    out *= power;
  }
  return out;
}

bool check_divisibility(const FanoProblem& p, const BigInt& value) {
  BigInt cert = divisibility_certificate(p);
  return mpz_divisible_p(value.get_mpz_t(), cert.get_mpz_t()) != 0;
}

double estimate_work(const FanoProblem& p, DegreeMethod method) {
  double factors = factor_count(p);
  double capacity = key_capacity(p);
  if (method == DegreeMethod::naive) {
    return factors * capacity;
  }
  KroneckerPlan plan = kronecker_plan(p.n, p.r);
  double terms = std::min(plan.target_exponent.get_d() + 1, capacity);
  return factors * terms;
}

DegreeMethod select_method(const FanoProblem& p, const DegreeOptions& options) {
  switch (options.method) {
    case DegreeOptions::Method::naive:
      return DegreeMethod::naive;
    case DegreeOptions::Method::kronecker:
      return DegreeMethod::kronecker;
    case DegreeOptions::Method::automatic:
      break;
  }
  // the naive map is the independent oracle; prefer it while it stays small
  return p.r <= 3 ? DegreeMethod::naive : DegreeMethod::kronecker;
}

DegreeResult fano_degree(const FanoProblem& p, const DegreeOptions& options) {
  require_finite_problem(p);

  if (options.use_cache && options.cache_path) {
    if (auto hit = cache_lookup(*options.cache_path, p.key())) {
      DegreeResult result{p, hit->value,
                          hit->method == "naive" ? DegreeMethod::naive
                                                 : DegreeMethod::kronecker,
                          hit->base, 0.0, 0, true};
      audit_exact_value(p, result.value, /*cached=*/true);
      return result;
    }
  }

  DegreeMethod method = select_method(p, options);
  gate_long_running(p, method, options);

  EngineLimits limits{options.term_limit, options.threads};
  EngineStats stats;
  ExactRing ring;
  DegreeResult result{p, BigInt(0), method, std::nullopt, 0.0, 0, false};

  auto start = std::chrono::steady_clock::now();
  if (method == DegreeMethod::naive) {
    result.value =
        multivariate_coefficient(assemble_factors(p), canonical_target(p), ring,
                                 limits, &stats);
  } else {
    KroneckerPlan plan = kronecker_plan(p.n, p.r, options.base_override);
    result.kronecker_base = plan.base;
    result.value = kronecker_coefficient(assemble_factors(p), plan, ring, limits, &stats);
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.peak_terms = stats.peak_terms;

  audit_exact_value(p, result.value, /*cached=*/false);

  if (options.use_cache && options.cache_path) {
    cache_append(*options.cache_path,
                 CacheEntry{p.key(), result.value,
                            method == DegreeMethod::naive ? "naive" : "kronecker",
                            result.kronecker_base, kVersion});
  }
  return result;
}

ModularDegreeResult fano_degree_mod(const FanoProblem& p, std::uint64_t modulus,
                                    const DegreeOptions& options) {
  require_finite_problem(p);
  gate_long_running(p, DegreeMethod::kronecker, options);

  KroneckerPlan plan = kronecker_plan(p.n, p.r, options.base_override);
  EngineLimits limits{options.term_limit, options.threads, options.dense_modular_slots};
  EngineStats stats;
  ModularRing ring(modulus);

  ModularDegreeResult result{p, 0, modulus, plan.base, 0.0, 0};
  auto start = std::chrono::steady_clock::now();
  result.residue = kronecker_coefficient(assemble_factors(p), plan, ring, limits, &stats);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.peak_terms = stats.peak_terms;
  return result;
}

std::optional<CacheEntry> cache_lookup(const std::string& path, const std::string& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::optional<CacheEntry> found;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.contains("key") || row["key"] != key) continue;
    CacheEntry entry;
    entry.key = key;
    entry.value = BigInt(row.value("N", "0"));
    entry.method = row.value("method", "");
    if (row.contains("base") && row["base"].is_number_integer()) {
      entry.base = row["base"].get<long>();
    }
    entry.version = row.value("version", "");
    found = std::move(entry);  // append-only file: the last entry wins
  }
  return found;
}

void cache_append(const std::string& path, const CacheEntry& entry) {
  nlohmann::ordered_json row;
  row["key"] = entry.key;
  row["N"] = entry.value.get_str();
  row["method"] = entry.method;
  if (entry.base) row["base"] = *entry.base;
  row["version"] = entry.version;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open degree cache for append: " + path);
  out << row.dump() << '\n';
}

}  // namespace fano
