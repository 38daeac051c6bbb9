#include "fano/quadrics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fano {

namespace {

void require_k(int k, int max_k = 30) {
  if (k < 1 || k > max_k) {
    throw std::invalid_argument("k must be between 1 and " + std::to_string(max_k));
  }
}

std::uint64_t coordinate_count_mask(int k) {
  return (std::uint64_t{1} << (2 * k + 3)) - 1;
}

}  // namespace

IncidencePoint::IncidencePoint(std::uint64_t subset_mask, int k) : k_(k) {
  require_k(k);
  const std::uint64_t all = coordinate_count_mask(k);
  if (subset_mask & ~all) {
    throw std::invalid_argument("subset mask has bits beyond 2k+3 coordinates");
  }
  // canonical member of {S, complement(S)}: the one without the last coordinate
  if (subset_mask >> (2 * k + 2) & 1) subset_mask ^= all;
  mask_ = subset_mask;
}

std::vector<IncidencePoint> all_incidence_points(int k) {
  require_k(k, 14);  // 2^(2k+2) points
  std::vector<IncidencePoint> out;
  out.reserve(std::size_t{1} << (2 * k + 2));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * k + 2)); ++m) {
    out.emplace_back(m, k);
  }
  return out;
}

int incidence_dimension(const IncidencePoint& u, const IncidencePoint& v, int k) {
  if (u.k() != k || v.k() != k) {
    throw std::invalid_argument("incidence points belong to a different k");
  }
  int w = std::popcount(u.mask() ^ v.mask());
  return k - std::min(w, 2 * k + 3 - w);
}

std::map<int, long long> incidence_profile(int k) {
  require_k(k);
  std::map<int, long long> out;
  for (int j = 1; j <= k + 1; ++j) {
    BigInt c = binomial(2 * static_cast<unsigned long>(k) + 3, j);
    out[k - j] = c.get_si();
  }
  return out;
}

BigInt weyl_d_order(int k) {
  require_k(k, 1000000);
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), 2 * static_cast<unsigned long>(k) + 3);
  return (BigInt(1) << (2 * k + 2)) * factorial;
}

bool verify_weyl_invariance(int k, int trials, std::uint64_t seed) {
  require_k(k);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int coords = 2 * k + 3;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));

  auto random_mask = [&] { return rng() & coordinate_count_mask(k); };
  auto random_even_mask = [&] {
    for (;;) {
      std::uint64_t m = random_mask();
      if (std::popcount(m) % 2 == 0) return m;
    }
  };
  auto permute = [&](std::uint64_t mask, const std::vector<int>& sigma) {
    std::uint64_t out = 0;
    for (int i = 0; i < coords; ++i) {
      if (mask >> i & 1) out |= std::uint64_t{1} << sigma[i];
    }
    return out;
  };

  std::vector<int> sigma(coords);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (int t = 0; t < trials; ++t) {
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::uint64_t translation = random_even_mask();
    IncidencePoint u(random_mask(), k);
    IncidencePoint v(random_mask(), k);
    IncidencePoint gu(permute(u.mask(), sigma) ^ translation, k);
    IncidencePoint gv(permute(v.mask(), sigma) ^ translation, k);
    if (incidence_dimension(gu, gv, k) != incidence_dimension(u, v, k)) return false;
  }
  return true;
}

bool weyl_parity_obstruction(int k) {
  require_k(k, (std::numeric_limits<int>::max() - 3) / 2);
  return factorial_two_adic_valuation(2L * k + 3) < 2L * k + 2;
}

}  // namespace fano
