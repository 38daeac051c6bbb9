#include "fano/transitivity.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

BigInt binom_dn(int d, int n) {
  // C(d + n, n) = C(d + n, d); pass the small index
  return binomial(static_cast<unsigned long>(d) + n, static_cast<unsigned long>(d));
}

void require_finite(const FanoProblem& p, const char* who) {
  if (expected_dimension(p) != 0) {
    throw std::invalid_argument(std::string(who) + " requires delta = 0");
  }
}

std::string join_values(const std::vector<BigInt>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i].get_str();
  }
  return out.str();
}

}  // namespace

BigInt pair_linear_system_dim(int n, int d, int r, int m) {
  if (d < 2) throw std::invalid_argument("pair_linear_system_dim requires d >= 2");
  if (m < -1 || m > r || r >= n) {
    throw std::invalid_argument("pair_linear_system_dim requires -1 <= m <= r < n");
  }
  BigInt out = binom_dn(d, n) - 2 * binom_dn(d, r);
  if (m >= 0) out += binom_dn(d, m);
  return out;
}

BigInt independent_linear_system_dim(int n, int d, int r, int count) {
  if (d < 2) throw std::invalid_argument("independent_linear_system_dim requires d >= 2");
  if (count < 1 || r < 0 || r >= n) {
    throw std::invalid_argument("independent_linear_system_dim requires 1 <= count, r < n");
  }
  if (static_cast<long long>(count) * (r + 1) > static_cast<long long>(n) + 1) {
    throw std::invalid_argument("spans cannot be independent: count (r+1) > n + 1");
  }
  return binom_dn(d, n) - count * binom_dn(d, r);
}

BigInt crossing_polynomial_value(const FanoProblem& p, int m) {
  if (m < -1) throw std::invalid_argument("crossing polynomial needs m >= -1");
  BigInt value = BigInt(2L * p.r - p.n - m) * (m + 1);
  for (int d : p.degrees.values()) {
    if (m >= 0) value += binom_dn(d, m);
    // m = -1: C(d - 1, d) = 0
  }
  return value;
}

std::vector<BigInt> crossing_obstruction(const FanoProblem& p) {
  require_finite(p, "crossing_obstruction");
  std::vector<BigInt> out;
  out.reserve(p.r);
  for (int m = 0; m <= p.r - 1; ++m) out.push_back(crossing_polynomial_value(p, m));
  return out;
}

BootstrapCheck bootstrap_condition(const FanoProblem& p, int m) {
  if (m < 2) throw std::invalid_argument("bootstrap_condition requires m >= 2");
  BootstrapCheck check;
  check.span_lhs = p.n + 1;
  check.span_rhs = BigInt(m) * (p.r + 1);
  check.holds = check.span_lhs >= check.span_rhs;
  for (int d : p.degrees.values()) {
    BigInt sections = binom_dn(d, p.n);
    BigInt needed = BigInt(m + 1) * binom_dn(d, p.r);
    check.holds = check.holds && sections > needed;
    check.section_counts.emplace_back(std::move(sections), std::move(needed));
  }
  return check;
}

bool bootstrap_holds(const FanoProblem& p, int m) {
  if (m < 2) throw std::invalid_argument("bootstrap_holds requires m >= 2");
  if (static_cast<long long>(p.n) + 1 < static_cast<long long>(m) * (p.r + 1)) {
    return false;
  }
  for (int d : p.degrees.values()) {
    BigInt needed = BigInt(m + 1) * binom_dn(d, p.r);
    // C(d + n, n) >= n + 1 for d >= 1, so large n passes without evaluation
    if (needed < p.n + 1) continue;
    if (binom_dn(d, p.n) <= needed) return false;
  }
  return true;
}

std::vector<Rational> three_quadrics_obstruction(int k) {
  if (k < 2) throw std::invalid_argument("three_quadrics_obstruction requires k >= 2");
  std::vector<Rational> out;
  for (int m = 0; m <= 2 * k - 3; ++m) {
    Rational value(static_cast<long>(m) - 2 * k - 6, 2);
    value.canonicalize();
    value *= m + 1;
    out.push_back(value);
  }
  return out;
}

TransitivityEvidence transitivity_evidence(const FanoProblem& p) {
  require_finite(p, "transitivity_evidence");
  if (delta_minus(p) < 0) {
    throw std::invalid_argument("transitivity_evidence requires delta_minus >= 0");
  }
  if (boundary_case(p) != BoundaryCase::none) {
    throw std::invalid_argument(
        "boundary cases carry a Weyl-group classification, not a transitivity chain");
  }

  TransitivityEvidence ev;
  ev.certificates.push_back({"transitive",
                             "the incidence covering is irreducible over the moduli of "
                             "complete intersections",
                             {},
                             true});
  ev.transitivity = 1;

  auto crossing = crossing_obstruction(p);
  bool crossing_ok = true;
  for (const auto& v : crossing) crossing_ok = crossing_ok && sgn(v) < 0;
  ev.certificates.push_back({"no-crossing",
                             "f(m) < 0 for 0 <= m <= r-1: distinct planes on a general "
                             "member are disjoint, giving double transitivity; f = [" +
                                 join_values(crossing) + "]",
                             crossing,
                             crossing_ok});
  if (!crossing_ok) return ev;
  ev.transitivity = 2;

  auto record_bootstrap = [&](int m, const BootstrapCheck& b) {
    std::vector<BigInt> values = {b.span_lhs, b.span_rhs};
    for (const auto& [have, need] : b.section_counts) {
      values.push_back(have);
      values.push_back(need);
    }
    std::ostringstream detail;
    detail << "n+1 >= " << m << "(r+1) and C(d+n,n) > " << (m + 1)
           << " C(d+r,r) for every degree";
    ev.certificates.push_back({"bootstrap(m=" + std::to_string(m) + ")", detail.str(),
                               std::move(values), b.holds});
  };

  const bool three_quadrics_route =
      p.degrees == MultiDegree{2, 2, 2} && p.n > 8;

  auto b2 = bootstrap_condition(p, 2);
  record_bootstrap(2, b2);
  if (!b2.holds) return ev;
  ev.transitivity = 3;

  if (three_quadrics_route) {
    ev.route = TransitivityEvidence::Route::three_quadrics;
    int k = p.r / 2;
    auto bound = three_quadrics_obstruction(k);
    bool all_negative = true;
    std::vector<BigInt> values;
    for (const auto& q : bound) {
      all_negative = all_negative && sgn(q) < 0;
      values.push_back(q.get_num());  // integral by construction
    }
    ev.certificates.push_back(
        {"three-quadrics-configuration-bound",
         "(m+1)(-k-3+m/2) < 0 for 0 <= m <= 2k-3: a fourth plane on a general "
         "member avoids the distinguished triple subspace; bound = [" +
             join_values(values) + "]",
         std::move(values), all_negative});
    if (all_negative) ev.transitivity = 4;
    return ev;
  }

  auto b3 = bootstrap_condition(p, 3);
  record_bootstrap(3, b3);
  if (b3.holds) ev.transitivity = 4;
  return ev;
}

CfsgDecision cfsg_branch(int transitivity, const DegreeKnowledge& knowledge) {
  if (transitivity < 3) {
    throw std::invalid_argument("cfsg_branch requires at least 3-transitivity");
  }
  CfsgDecision decision;
  using Kind = DegreeKnowledge::Kind;

  const bool exact = knowledge.kind == Kind::exact;
  const bool above_24 =
      (exact && knowledge.exact_value > 24) || (!exact && knowledge.exceeds_24);

  if (transitivity >= 4 && above_24) {
    decision.checks.push_back({"four-transitive-degree-floor",
                               "the group is 4-transitive and N > 24",
                               exact ? std::vector<BigInt>{knowledge.exact_value}
                                     : std::vector<BigInt>{},
                               true});
    decision.satisfied = true;
    decision.branch = 2;
    return decision;
  }

  if (exact) {
    const BigInt& n = knowledge.exact_value;
    if (n < 2) {
      decision.checks.push_back({"degree-sanity", "N must be at least 2", {n}, false});
      return decision;
    }
    bool not_two_power = !is_power_of_two(n);
    decision.checks.push_back(
        {"degree-not-power-of-two", "N is not a power of 2", {n}, not_two_power});
    auto pp = prime_power_check(n - 1);
    decision.probabilistic = pp.probabilistic;
    std::string detail = "N - 1 is not p^m for a prime p and m >= 1";
    if (pp.probabilistic) detail += " (primality verdicts probable only)";
    decision.checks.push_back(
        {"degree-minus-one-not-prime-power", detail, {n - 1}, !pp.is_prime_power});
    decision.checks.push_back({"degree-exceeds-24", "N > 24", {n}, n > 24});
    if (not_two_power && !pp.is_prime_power && n > 24) {
      decision.satisfied = true;
      decision.branch = 1;
    }
    return decision;
  }

  if (knowledge.kind == Kind::residue_mod4) {
    bool certifies = knowledge.residue == 3 && knowledge.exceeds_24;
    decision.checks.push_back(
        {"residue-3-mod-4",
         "N = 3 mod 4 with N > 24: N is odd, so not a power of two, and "
         "N - 1 = 2 * odd with odd > 1, so not a prime power",
         {BigInt(knowledge.residue)},
         certifies});
    decision.satisfied = certifies;
    decision.branch = certifies ? 1 : 0;
    return decision;
  }

  decision.checks.push_back({"arithmetic-conditions-unavailable",
                             "only a degree floor is known; the power-of-two and "
                             "prime-power conditions cannot be checked",
                             {},
                             false});
  return decision;
}

}  // namespace fano
