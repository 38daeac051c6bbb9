#ifndef FANO_TRANSITIVITY_HPP
#define FANO_TRANSITIVITY_HPP

#include <string>
#include <vector>

#include "fano/catalog.hpp"
#include "fano/numbers.hpp"

namespace fano {

/// One verified inequality in an evidence chain.
struct CertificateRecord {
  std::string certificate;     // short machine name
  std::string detail;          // what was checked, human-readable
  std::vector<BigInt> values;  // the numbers behind the check
  bool satisfied = false;
};

struct TransitivityEvidence {
  enum class Route { generic, three_quadrics };
  int transitivity = 1;  // proven t in {1, 2, 3, 4}
  Route route = Route::generic;
  std::vector<CertificateRecord> certificates;
};

/// dim of degree-d forms vanishing on two r-planes meeting in dimension m:
/// C(d+n, n) - 2 C(d+r, r) + C(d+m, m). m = -1 means disjoint planes and
/// drops the last term. Requires d >= 2 and -1 <= m <= r < n.
BigInt pair_linear_system_dim(int n, int d, int r, int m);

/// dim of degree-d forms vanishing on `count` linearly independent r-planes:
/// C(d+n, n) - count * C(d+r, r). Requires count * (r+1) <= n + 1.
BigInt independent_linear_system_dim(int n, int d, int r, int count);

/// f(m) = (2r - n - m)(m + 1) + sum_i C(d_i + m, d_i) for m = 0..r-1.
/// All entries negative certifies that two distinct r-planes on a general
/// member never meet, the input to double transitivity. Requires delta = 0.
std::vector<BigInt> crossing_obstruction(const FanoProblem& p);

/// The same polynomial at an arbitrary m >= -1 (it has roots at -1 and r).
BigInt crossing_polynomial_value(const FanoProblem& p, int m);

struct BootstrapCheck {
  bool holds = false;
  BigInt span_lhs;  // n + 1
  BigInt span_rhs;  // m (r + 1)
  // per degree: C(d_i + n, n) and (m + 1) C(d_i + r, r)
  std::vector<std::pair<BigInt, BigInt>> section_counts;
};

/// n + 1 >= m(r + 1) and C(d_i + n, n) > (m + 1) C(d_i + r, r) for every d_i:
/// the inequalities that push m-transitivity to (m+1)-transitivity.
BootstrapCheck bootstrap_condition(const FanoProblem& p, int m);

/// Same verdict as bootstrap_condition().holds without materializing the
/// large binomials; usable on millions of problems.
bool bootstrap_holds(const FanoProblem& p, int m);

/// (m + 1)(-k - 3 + m/2) for m = 0..2k-3; all negative certifies the
/// triple-quadrics configuration estimate behind 4-transitivity for the
/// (2,2,2) family with n > 8. Requires k >= 2. The values are integral.
std::vector<Rational> three_quadrics_obstruction(int k);

/// Full chain: t=1 unconditional, t=2 from the crossing obstruction, then
/// bootstrap with m=2 and m=3, or the three-quadrics route for (2,2,2) with
/// n > 8. Requires delta = 0, delta_minus >= 0 and no boundary case.
TransitivityEvidence transitivity_evidence(const FanoProblem& p);

/// What is known about the plane count N when the CFSG test runs.
struct DegreeKnowledge {
  enum class Kind { exact, residue_mod4, floor_only };
  Kind kind = Kind::floor_only;
  BigInt exact_value;      // kind == exact
  unsigned residue = 0;    // kind == residue_mod4
  bool exceeds_24 = false; // established through the divisibility floor
};

struct CfsgDecision {
  bool satisfied = false;
  int branch = 0;  // 1 or 2 when satisfied
  bool probabilistic = false;
  std::vector<CertificateRecord> checks;
};

/// Classification-of-finite-simple-groups test: branch (2) needs t >= 4 and
/// N > 24; branch (1) needs t >= 3, N not a power of two, N - 1 not a prime
/// power, and N > 24. A residue of 3 mod 4 with N > 24 settles branch (1)
/// arithmetically: N is odd and N - 1 = 2 * odd with odd > 1.
CfsgDecision cfsg_branch(int transitivity, const DegreeKnowledge& knowledge);

}  // namespace fano

#endif
