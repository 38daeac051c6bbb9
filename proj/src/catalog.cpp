#include "fano/catalog.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fano {

MultiDegree::MultiDegree(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("multidegree must be nonempty");
  for (int d : degrees_) {
    if (d < 2) throw std::invalid_argument("hypersurface degrees must exceed 1");
  }
  std::sort(degrees_.begin(), degrees_.end());
}

std::string MultiDegree::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out << ',';
    out << degrees_[i];
  }
  return out.str();
}

FanoProblem::FanoProblem(MultiDegree d, int n_in, int r_in)
    : degrees(std::move(d)), n(n_in), r(r_in) {
  if (r < 1) throw std::invalid_argument("plane dimension r must be >= 1");
  if (n <= r) throw std::invalid_argument("ambient dimension n must exceed r");
}

std::string FanoProblem::key() const {
  std::ostringstream out;
  out << "d=" << degrees.str() << ";n=" << n << ";r=" << r;
  return out.str();
}

namespace {

long long checked_ll(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(what);
  return v.get_si();
}

// sum_i C(d_i + r, r), exact
BigInt degree_binomial_sum(const MultiDegree& d, int r) {
  BigInt sum(0);
  for (int di : d.values()) {
    sum += binomial(static_cast<unsigned long>(di) + r, static_cast<unsigned long>(r));
  }
  return sum;
}

}  // namespace

long long expected_dimension(const FanoProblem& p) {
  BigInt delta = BigInt(p.n - p.r) * (p.r + 1) - degree_binomial_sum(p.degrees, p.r);
  return checked_ll(delta, "expected dimension exceeds 64 bits");
}

long long delta_minus(const FanoProblem& p) {
  long long delta = expected_dimension(p);
  long long crossing = static_cast<long long>(p.n) - 2 * p.r - p.degrees.count();
  return std::min(delta, crossing);
}

std::optional<int> solve_ambient_dimension(const MultiDegree& d, int r) {
  if (r < 1) throw std::invalid_argument("plane dimension r must be >= 1");
  BigInt sum = degree_binomial_sum(d, r);
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(r) + 1)) {
    return std::nullopt;
  }
  BigInt n = sum / (r + 1) + r;
  if (!n.fits_sint_p()) throw std::overflow_error("ambient dimension exceeds int");
  return static_cast<int>(n.get_si());
}

namespace {

struct Enumerator {
  const SearchBounds& bounds;
  const std::function<void(const FanoProblem&)>& visit;
  // binom_table[d][r] = C(d + r, r), 64-bit with overflow detection
  std::vector<std::vector<unsigned long long>> binom_table;
  std::vector<int> prefix;

  Enumerator(const SearchBounds& b, const std::function<void(const FanoProblem&)>& v)
      : bounds(b), visit(v) {
    binom_table.assign(bounds.max_d + 1,
                       std::vector<unsigned long long>(bounds.max_r + 1, 0));
    for (int d = 2; d <= bounds.max_d; ++d) {
      for (int r = 1; r <= bounds.max_r; ++r) {
        BigInt c = binomial(static_cast<unsigned long>(d) + r, r);
        if (!c.fits_ulong_p()) {
          throw std::overflow_error("search bounds too large for 64-bit enumeration");
        }
        binom_table[d][r] = c.get_ui();
      }
    }
  }

  void emit_for_prefix() {
    const int s = static_cast<int>(prefix.size());
    const bool has_cubic_or_more = prefix.back() >= 3;  // nondecreasing
    if (bounds.require_degree_above_two && !has_cubic_or_more) return;
    for (int r = 1; r <= bounds.max_r; ++r) {
      unsigned long long sum = 0;
      for (int d : prefix) sum += binom_table[d][r];
      if (sum % static_cast<unsigned long long>(r + 1) != 0) continue;  // delta != 0
      unsigned long long n_ull = sum / (r + 1) + r;
      if (n_ull > static_cast<unsigned long long>(std::numeric_limits<int>::max()))
        throw std::overflow_error("ambient dimension exceeds int");
      int n = static_cast<int>(n_ull);
      if (n - 2 * r - s < 0) continue;  // delta_minus < 0: empty Fano scheme
      if (bounds.max_n && n > *bounds.max_n) continue;
      if (bounds.require_n_at_most_4r && n > 4 * r) continue;
      visit(FanoProblem(MultiDegree(prefix), n, r));
    }
  }

  // Depth-first over nondecreasing tuples; emitting a prefix before its
  // extensions yields global lexicographic order, and for fixed degrees n is
  // strictly increasing in r, so the (degrees, n, r) stream is sorted.
  void recurse(int lo) {
    if (!prefix.empty()) emit_for_prefix();
    if (static_cast<int>(prefix.size()) == bounds.max_s) return;
    for (int d = lo; d <= bounds.max_d; ++d) {
      prefix.push_back(d);
      recurse(d);
      prefix.pop_back();
    }
  }
};

}  // namespace

void for_each_problem(const SearchBounds& bounds,
                      const std::function<void(const FanoProblem&)>& visit) {
  if (bounds.max_r < 1 || bounds.max_d < 2 || bounds.max_s < 1) {
    throw std::invalid_argument("search bounds must allow r >= 1, d >= 2, s >= 1");
  }
  Enumerator e(bounds, visit);
  e.recurse(2);
}

std::vector<FanoProblem> enumerate_problems(const SearchBounds& bounds) {
  std::vector<FanoProblem> out;
  for_each_problem(bounds, [&](const FanoProblem& p) { out.push_back(p); });
  return out;
}

BoundaryCase boundary_case(const FanoProblem& p) {
  if (expected_dimension(p) != 0) {
    throw std::invalid_argument("boundary_case requires delta = 0");
  }
  if (p.n - 2 * p.r - p.degrees.count() != 0) return BoundaryCase::none;
  if (p.degrees == MultiDegree{3} && p.r == 1) return BoundaryCase::cubic_surface;
  if (p.degrees == MultiDegree{2, 2}) return BoundaryCase::two_quadrics;
  throw std::logic_error("n - 2r - s = 0 outside the two boundary families");
}

}  // namespace fano
