#ifndef FANO_QUADRICS_HPP
#define FANO_QUADRICS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fano/numbers.hpp"

namespace fano {

/// A k-plane on an intersection of two quadrics in P^(2k+2), indexed by a
/// subset of the 2k+3 diagonalizing coordinates modulo complementation. The
/// canonical representative omits the last coordinate, so there are exactly
/// 2^(2k+2) points.
class IncidencePoint {
 public:
  IncidencePoint(std::uint64_t subset_mask, int k);

  std::uint64_t mask() const { return mask_; }
  int k() const { return k_; }

  friend bool operator==(const IncidencePoint&, const IncidencePoint&) = default;
  friend auto operator<=>(const IncidencePoint&, const IncidencePoint&) = default;

 private:
  std::uint64_t mask_ = 0;
  int k_ = 0;
};

std::vector<IncidencePoint> all_incidence_points(int k);

/// dim(plane_u meet plane_v) = k - min(w, 2k+3-w), w the Hamming weight of
/// the symmetric difference; -1 means disjoint.
int incidence_dimension(const IncidencePoint& u, const IncidencePoint& v, int k);

/// Per basepoint: C(2k+3, j) partners at dimension k-j for j = 1..k+1.
/// Independent of the basepoint.
std::map<int, long long> incidence_profile(int k);

/// 2^(2k+2) * (2k+3)!, the order of the signed-permutation group with an
/// even number of sign changes on 2k+3 letters.
BigInt weyl_d_order(int k);

/// Samples coordinate permutations and even-weight sign translations and
/// checks that incidence dimensions are preserved.
bool verify_weyl_invariance(int k, int trials, std::uint64_t seed = 0x2b2b5eedULL);

/// v2((2k+3)!) < 2k+2: a transitive group on the 2^(2k+2) planes cannot meet
/// the permutation quotient in an isomorphism.
bool weyl_parity_obstruction(int k);

}  // namespace fano

#endif
