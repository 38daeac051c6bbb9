#include "fano/polyarith.hpp"

namespace fano {

namespace {

void compositions(int remaining, int parts, std::vector<int>& prefix,
                  std::vector<LinearForm>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back(LinearForm(prefix));
    prefix.pop_back();
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    prefix.push_back(a);
    compositions(remaining - a, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LinearForm> q_factors(int r, int d) {
  if (r < 1) throw std::invalid_argument("q_factors requires r >= 1");
  if (d < 2) throw std::invalid_argument("q_factors requires d >= 2");
  std::vector<LinearForm> out;
  BigInt count = binomial(static_cast<unsigned long>(d) + r, r);
  if (count.fits_ulong_p()) out.reserve(count.get_ui());
  std::vector<int> prefix;
  compositions(d, r + 1, prefix, out);
  return out;
}

std::vector<LinearForm> vandermonde_factors(int r) {
  if (r < 1) throw std::invalid_argument("vandermonde_factors requires r >= 1");
  std::vector<LinearForm> out;
  out.reserve(static_cast<std::size_t>(r) * (r + 1) / 2);
  for (int i = 0; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      std::vector<int> c(static_cast<std::size_t>(r) + 1, 0);
      c[i] = 1;
      c[j] = -1;
      out.push_back(LinearForm(std::move(c)));
    }
  }
  return out;
}

std::vector<LinearForm> interleave_evenly(const std::vector<LinearForm>& q,
                                          const std::vector<LinearForm>& v) {
  if (v.empty()) return q;
  if (q.empty()) return v;
  const std::size_t total = q.size() + v.size();
  const std::size_t step = (total + v.size() - 1) / v.size();
  std::vector<LinearForm> out;
  out.reserve(total);
  std::size_t qi = 0, vi = 0;
  for (std::size_t slot = 1; slot <= total; ++slot) {
    if ((slot % step == 0 && vi < v.size()) || qi == q.size()) {
      out.push_back(v[vi++]);
    } else {
      out.push_back(q[qi++]);
    }
  }
  return out;
}

bool validate_kronecker_base(long long n, long long r, long long D, long long e) {
  if (e < 2) throw std::invalid_argument("kronecker base must be >= 2");
  if (r < 1 || n <= r) return false;
  // every canonical digit n-1, ..., n-r below e
  if (n - 1 >= e) return false;
  // representations of T with digit sum <= D are forced onto the canonical
  // digit sum D - n when the slack e - 1 exceeds the remaining room
  return D < (D - n) + (e - 1);
}

long smallest_valid_base(int n, int r) {
  long long D = static_cast<long long>(r + 1) * n -
                static_cast<long long>(r) * (r + 1) / 2;
  for (long e = 2;; ++e) {
    if (validate_kronecker_base(n, r, D, e)) return e;
  }
}

KroneckerPlan kronecker_plan(int n, int r, std::optional<long> base_override) {
  if (r < 1 || n <= r) throw std::invalid_argument("kronecker_plan requires n > r >= 1");
  KroneckerPlan plan;
  plan.n = n;
  plan.r = r;
  plan.total_degree = static_cast<long long>(r + 1) * n -
                      static_cast<long long>(r) * (r + 1) / 2;
  plan.base = base_override.value_or(static_cast<long>(n) + 2);
  if (!validate_kronecker_base(n, r, plan.total_degree, plan.base)) {
    throw std::invalid_argument("base " + std::to_string(plan.base) +
                                " fails the uniqueness criterion for n = " +
                                std::to_string(n) + ", r = " + std::to_string(r));
  }
  BigInt power(1);
  for (int i = 1; i <= r; ++i) {
    plan.target_exponent += BigInt(n - i) * power;
    power *= plan.base;
  }
  // power is now e^r; the target must sit below e^r * D
  if (plan.target_exponent >= power * BigInt(static_cast<long>(plan.total_degree))) {
    throw std::logic_error("kronecker target exponent out of range");
  }
  return plan;
}

namespace detail {

void check_factor_set(const std::vector<LinearForm>& factors, int arity,
                      long long total_degree) {
  for (const auto& f : factors) {
    if (f.arity() != arity) {
      throw std::invalid_argument("factor arity does not match the target");
    }
  }
  if (static_cast<long long>(factors.size()) != total_degree) {
    throw std::invalid_argument(
        "factor count does not match the target degree (inhomogeneous product)");
  }
}

BigInt power_of_long(long base, int exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent < 0 ? 0 : exponent));
  return out;
}

std::uint64_t dense_modular_kronecker(const std::vector<LinearForm>& factors,
                                      const KroneckerPlan& plan, const ModularRing& ring,
                                      const EngineLimits& limits, EngineStats* stats) {
  const std::uint64_t m = ring.modulus();
  const std::uint64_t target = exp_from_bigint<std::uint64_t>(plan.target_exponent);

  std::vector<std::uint64_t> shift(plan.r);  // e^(i-1), all <= T
  BigInt power(1);
  for (int i = 0; i < plan.r; ++i) {
    shift[i] = exp_from_bigint<std::uint64_t>(power);
    power *= plan.base;
  }

  std::vector<std::uint8_t> value(target + 1, 0);
  value[0] = static_cast<std::uint8_t>(1 % m);
  std::uint64_t reach = 0;  // highest possibly-nonzero exponent so far

  struct Mono {
    std::uint64_t shift;
    std::uint32_t coeff;
  };
  std::vector<Mono> monos;
  for (const auto& f : factors) {
    monos.clear();
    std::uint32_t constant = static_cast<std::uint32_t>(ring.from_long(f.coefficients[0]));
    std::uint64_t max_shift = 0;
    for (int i = 1; i <= plan.r; ++i) {
      if (f.coefficients[i] == 0) continue;
      monos.push_back({shift[i - 1],
                       static_cast<std::uint32_t>(ring.from_long(f.coefficients[i]))});
      max_shift = shift[i - 1];  // shifts ascend
    }
    std::uint64_t new_reach =
        (max_shift > target - reach) ? target : reach + max_shift;

    // in place, descending: every v[x - s] read still holds the old round;
    // above max_shift every monomial is active, below it each needs a check
    std::uint64_t x = new_reach;
    while (x >= max_shift) {
      std::uint32_t acc = constant * value[x];
      for (const auto& mono : monos) acc += mono.coeff * value[x - mono.shift];
      value[x] = static_cast<std::uint8_t>(acc % m);
      if (x == 0) break;
      --x;
    }
    if (max_shift > 0) {
      for (;;) {
        std::uint32_t acc = constant * value[x];
        for (const auto& mono : monos) {
          if (mono.shift <= x) acc += mono.coeff * value[x - mono.shift];
        }
        value[x] = static_cast<std::uint8_t>(acc % m);
        if (x == 0) break;
        --x;
      }
    }
    reach = new_reach;
  }
  if (stats) stats->peak_terms = target + 1;  // allocated slots, one byte each
  (void)limits;
  return value[target];
}

}  // namespace detail

}  // namespace fano
