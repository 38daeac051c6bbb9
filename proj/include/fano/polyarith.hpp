#ifndef FANO_POLYARITH_HPP
#define FANO_POLYARITH_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "fano/numbers.hpp"
#include "fano/rings.hpp"
#include "fano/sparse_unipoly.hpp"

namespace fano {

/// One linear factor a_0 x_0 + ... + a_r x_r.
struct LinearForm {
  std::vector<int> coefficients;

  explicit LinearForm(std::vector<int> c) : coefficients(std::move(c)) {
    if (coefficients.empty()) throw std::invalid_argument("linear form must be nonempty");
    bool nonzero = false;
    for (int a : coefficients) nonzero = nonzero || a != 0;
    if (!nonzero) throw std::invalid_argument("linear form must not be identically zero");
  }

  int arity() const { return static_cast<int>(coefficients.size()); }  // r + 1
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// All compositions (a_0, ..., a_r) of d into r+1 nonnegative parts in
/// lexicographic order; C(d + r, r) forms.
std::vector<LinearForm> q_factors(int r, int d);

/// The C(r+1, 2) forms x_i - x_j for 0 <= i < j <= r.
std::vector<LinearForm> vandermonde_factors(int r);

/// Spreads the v-list evenly among the q-list (one v every
/// ceil(total / |v|)-th slot). Early sign mixing keeps intermediate
/// products smaller.
std::vector<LinearForm> interleave_evenly(const std::vector<LinearForm>& q,
                                          const std::vector<LinearForm>& v);

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::size_t live_terms)
      : std::runtime_error(what), live_terms_(live_terms) {}
  std::size_t live_terms() const { return live_terms_; }

 private:
  std::size_t live_terms_;
};

struct EngineLimits {
  std::size_t term_limit = 50'000'000;  // live terms before aborting
  int threads = 1;
  // Modular runs with modulus <= 255 and target exponent below this many
  // slots may use one byte per exponent instead of the sparse map. Off by
  // default; the memory cost is exactly T + 1 bytes.
  std::size_t dense_modular_slots = 0;
};

struct EngineStats {
  std::size_t peak_terms = 0;
};

/// Substitution x_0 = 1, x_i = t^(e^(i-1)) turning the target monomial
/// x_0^n x_1^(n-1) ... x_r^(n-r) into the single exponent
/// T = sum_{i=1..r} (n-i) e^(i-1).
struct KroneckerPlan {
  int n = 0;
  int r = 0;
  long base = 0;               // e
  long long total_degree = 0;  // D, the number of linear factors
  BigInt target_exponent;      // T
};

/// Sufficient criterion for T to have a unique representation among
/// exponent vectors with digit sum at most D: every canonical digit
/// n-1, ..., n-r is below e, and the canonical digit sum D - n leaves
/// slack D < (D - n) + (e - 1). Requires e >= 2.
bool validate_kronecker_base(long long n, long long r, long long D, long long e);

/// Smallest e passing the sufficient criterion (scan from 2 upward).
long smallest_valid_base(int n, int r);

/// Plan with D = sum_{i=0..r} (n-i) and base e = n+2 unless overridden;
/// an override must pass validate_kronecker_base. Requires n > r >= 1.
KroneckerPlan kronecker_plan(int n, int r, std::optional<long> base_override = {});

namespace detail {

// Mixed-radix packing of capped exponent vectors into 64-bit keys.
inline std::vector<std::uint64_t> mixed_radix_strides(const std::vector<int>& caps) {
  std::vector<std::uint64_t> strides(caps.size());
  std::uint64_t cur = 1;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    strides[i] = cur;
    std::uint64_t radix = static_cast<std::uint64_t>(caps[i]) + 1;
    if (cur > UINT64_MAX / radix) {
      throw ResourceLimitError("per-variable exponent caps exceed 64-bit keys", 0);
    }
    cur *= radix;
  }
  return strides;
}

void check_factor_set(const std::vector<LinearForm>& factors, int arity,
                      long long total_degree);

BigInt power_of_long(long base, int exponent);

// Exp-typed view of the plan.
template <class Exp>
struct KroneckerContext {
  Exp target;                 // T
  std::vector<Exp> variable_shift;  // 1, e, e^2, ..., e^(r-1)
};

template <class Exp>
Exp exp_from_bigint(const BigInt& v);

template <>
inline std::uint64_t exp_from_bigint<std::uint64_t>(const BigInt& v) {
  return static_cast<std::uint64_t>(v.get_ui());
}

template <>
inline unsigned __int128 exp_from_bigint<unsigned __int128>(const BigInt& v) {
  BigInt high = v >> 64;
  BigInt low = v - (high << 64);
  return (static_cast<unsigned __int128>(high.get_ui()) << 64) |
         static_cast<unsigned __int128>(low.get_ui());
}

template <>
inline BigInt exp_from_bigint<BigInt>(const BigInt& v) {
  return v;
}

template <class Exp>
KroneckerContext<Exp> make_context(const KroneckerPlan& plan) {
  KroneckerContext<Exp> ctx;
  ctx.target = exp_from_bigint<Exp>(plan.target_exponent);
  ctx.variable_shift.reserve(plan.r);
  BigInt p(1);
  for (int i = 1; i <= plan.r; ++i) {
    ctx.variable_shift.push_back(exp_from_bigint<Exp>(p));
    p *= plan.base;
  }
  return ctx;
}

template <class Exp>
SubstitutedForm<Exp> substitute(const LinearForm& f, const KroneckerContext<Exp>& ctx) {
  SubstitutedForm<Exp> out;
  const auto& c = f.coefficients;
  if (c[0] != 0) out.monomials.emplace_back(Exp(0), c[0]);
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) out.monomials.emplace_back(ctx.variable_shift[i - 1], c[i]);
  }
  return out;
}

// Shared live-term accounting across the chunk threads.
struct LiveTermGauge {
  std::atomic<long long> live{0};
  std::atomic<long long> peak{0};
  std::size_t limit = 0;

  void adjust(long long delta) {
    long long now = live.fetch_add(delta) + delta;
    long long prev = peak.load();
    while (now > prev && !peak.compare_exchange_weak(prev, now)) {
    }
    if (limit > 0 && now > static_cast<long long>(limit)) {
      throw ResourceLimitError(
          "live term count " + std::to_string(now) + " exceeds the limit of " +
              std::to_string(limit) + "; raise the term limit or use modular mode",
          static_cast<std::size_t>(now));
    }
  }
};

template <class Ring, class Exp>
SparseUniPoly<Exp, typename Ring::value_type> product_of_forms(
    const std::vector<SubstitutedForm<Exp>>& forms, std::size_t begin, std::size_t end,
    const Exp& limit, const Ring& ring, LiveTermGauge& gauge) {
  auto poly = SparseUniPoly<Exp, typename Ring::value_type>::unit(ring.one());
  gauge.adjust(1);
  for (std::size_t i = begin; i < end; ++i) {
    auto next = multiply_form_pruned(poly, forms[i], limit, ring);
    gauge.adjust(static_cast<long long>(next.term_count()) -
                 static_cast<long long>(poly.term_count()));
    poly = std::move(next);
  }
  return poly;
}

template <class Ring, class Exp>
typename Ring::value_type run_kronecker(const std::vector<LinearForm>& factors,
                                        const KroneckerPlan& plan, const Ring& ring,
                                        const EngineLimits& limits, EngineStats* stats) {
  using Poly = SparseUniPoly<Exp, typename Ring::value_type>;
  KroneckerContext<Exp> ctx = make_context<Exp>(plan);
  std::vector<SubstitutedForm<Exp>> forms;
  forms.reserve(factors.size());
  for (const auto& f : factors) forms.push_back(substitute(f, ctx));

  LiveTermGauge gauge;
  gauge.limit = limits.term_limit;

  Poly result;
  const int threads = limits.threads;
  if (threads > 1 && forms.size() >= 2 * static_cast<std::size_t>(threads)) {
    // Deterministic chunked reduction: contiguous chunks multiplied
    // concurrently, then folded in chunk order. Exact arithmetic makes the
    // final polynomial identical to the sequential product.
    std::vector<Poly> chunk(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t per = (forms.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          std::size_t begin = per * static_cast<std::size_t>(t);
          std::size_t end = std::min(forms.size(), begin + per);
          if (begin < end) {
            chunk[t] = product_of_forms(forms, begin, end, ctx.target, ring, gauge);
          } else {
            chunk[t] = Poly::unit(ring.one());
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    result = std::move(chunk[0]);
    for (int t = 1; t < threads; ++t) {
      auto next = multiply_sparse_pruned(result, chunk[t], ctx.target, ring);
      gauge.adjust(static_cast<long long>(next.term_count()) -
                   static_cast<long long>(result.term_count()) -
                   static_cast<long long>(chunk[t].term_count()));
      chunk[t] = Poly();
      result = std::move(next);
    }
  } else {
    result = product_of_forms(forms, 0, forms.size(), ctx.target, ring, gauge);
  }

  if (stats) stats->peak_terms = static_cast<std::size_t>(gauge.peak.load());
  const auto* coeff = result.coefficient_at(ctx.target);
  return coeff ? *coeff : ring.zero();
}

// Dense modular product: one byte per exponent in [0, T]. In-place
// multiplication by each substituted factor, iterating exponents downward so
// every read sees the previous round's value. Only for modulus <= 255.
std::uint64_t dense_modular_kronecker(const std::vector<LinearForm>& factors,
                                      const KroneckerPlan& plan, const ModularRing& ring,
                                      const EngineLimits& limits, EngineStats* stats);

}  // namespace detail

/// Coefficient of the monomial with the given per-variable exponents in the
/// product of the factors, by incremental multiplication over a capped
/// multivariate term map. Terms that exceed any cap are discarded: exponents
/// only grow, so they can never reach the target.
template <class Ring>
typename Ring::value_type multivariate_coefficient(
    const std::vector<LinearForm>& factors, const std::vector<int>& target,
    const Ring& ring, const EngineLimits& limits = {}, EngineStats* stats = nullptr) {
  if (target.empty()) throw std::invalid_argument("target must be nonempty");
  long long degree = 0;
  for (int t : target) {
    if (t < 0) throw std::invalid_argument("target exponents must be nonnegative");
    degree += t;
  }
  detail::check_factor_set(factors, static_cast<int>(target.size()), degree);

  const auto strides = detail::mixed_radix_strides(target);
  using Value = typename Ring::value_type;
  std::unordered_map<std::uint64_t, Value> current;
  current.emplace(0, ring.one());
  std::size_t peak = 1;

  for (const auto& factor : factors) {
    std::unordered_map<std::uint64_t, Value> next;
    next.reserve(current.size() * 2);
    for (const auto& [key, coeff] : current) {
      for (std::size_t j = 0; j < strides.size(); ++j) {
        long a = factor.coefficients[j];
        if (a == 0) continue;
        std::uint64_t digit = key / strides[j] % (static_cast<std::uint64_t>(target[j]) + 1);
        if (digit >= static_cast<std::uint64_t>(target[j])) continue;  // cap reached
        ring.add_scaled(next[key + strides[j]], coeff, a);
      }
    }
    std::erase_if(next, [&](const auto& kv) { return ring.is_zero(kv.second); });
    if (next.size() > limits.term_limit) {
      throw ResourceLimitError("live term count " + std::to_string(next.size()) +
                                   " exceeds the limit of " +
                                   std::to_string(limits.term_limit) +
                                   "; raise the term limit or use modular mode",
                               next.size());
    }
    peak = std::max(peak, next.size());
    current = std::move(next);
  }
  if (stats) stats->peak_terms = peak;

  std::uint64_t target_key = 0;
  for (std::size_t j = 0; j < strides.size(); ++j) {
    target_key += strides[j] * static_cast<std::uint64_t>(target[j]);
  }
  auto it = current.find(target_key);
  return it == current.end() ? ring.zero() : it->second;
}

/// Coefficient of t^T in the substituted product, over exact integers or a
/// modular ring. Exponent width (64-bit, 128-bit or arbitrary precision) is
/// chosen from the plan so overflow is impossible by construction.
template <class Ring>
typename Ring::value_type kronecker_coefficient(const std::vector<LinearForm>& factors,
                                                const KroneckerPlan& plan,
                                                const Ring& ring,
                                                const EngineLimits& limits = {},
                                                EngineStats* stats = nullptr) {
  detail::check_factor_set(factors, plan.r + 1, plan.total_degree);
  if constexpr (std::is_same_v<Ring, ModularRing>) {
    if (limits.dense_modular_slots > 0 && ring.modulus() <= 255 &&
        plan.target_exponent < BigInt(static_cast<unsigned long>(
                                   limits.dense_modular_slots))) {
      return detail::dense_modular_kronecker(factors, plan, ring, limits, stats);
    }
  }
  // Largest exponent ever formed: a kept exponent (<= T) plus one shift.
  BigInt bound = plan.target_exponent + detail::power_of_long(plan.base, plan.r - 1);
  static const BigInt k64 = (BigInt(1) << 64) - 1;
  static const BigInt k128 = (BigInt(1) << 127) - 1;
  if (bound <= k64) {
    return detail::run_kronecker<Ring, std::uint64_t>(factors, plan, ring, limits, stats);
  }
  if (bound <= k128) {
    return detail::run_kronecker<Ring, unsigned __int128>(factors, plan, ring, limits,
                                                          stats);
  }
  return detail::run_kronecker<Ring, BigInt>(factors, plan, ring, limits, stats);
}

}  // namespace fano

#endif
