#ifndef FANO_CATALOG_HPP
#define FANO_CATALOG_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fano/numbers.hpp"

namespace fano {

/// Hypersurface degrees in canonical nondecreasing order, every d_i >= 2.
class MultiDegree {
 public:
  explicit MultiDegree(std::vector<int> degrees);
  MultiDegree(std::initializer_list<int> degrees)
      : MultiDegree(std::vector<int>(degrees)) {}

  const std::vector<int>& values() const { return degrees_; }
  int count() const { return static_cast<int>(degrees_.size()); }  // s
  std::string str() const;  // "2,2,3"

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) {
    return a.degrees_ <=> b.degrees_;
  }

 private:
  std::vector<int> degrees_;
};

/// The triple ([d], n, r): r-planes on a complete intersection of
/// multidegree [d] in P^n.
struct FanoProblem {
  MultiDegree degrees;
  int n = 0;
  int r = 0;

  FanoProblem(MultiDegree d, int n, int r);

  std::string key() const;  // "d=2,2;n=4;r=1"

  friend bool operator==(const FanoProblem&, const FanoProblem&) = default;
  friend auto operator<=>(const FanoProblem& a, const FanoProblem& b) {
    return std::tie(a.degrees, a.n, a.r) <=> std::tie(b.degrees, b.n, b.r);
  }
};

struct SearchBounds {
  int max_r = 12;
  int max_d = 12;
  int max_s = 12;
  std::optional<int> max_n;
  bool require_n_at_most_4r = false;
  bool require_degree_above_two = false;  // some d_i >= 3
};

/// (n - r)(r + 1) - sum_i C(d_i + r, r)
long long expected_dimension(const FanoProblem& p);

/// min(delta, n - 2r - s)
long long delta_minus(const FanoProblem& p);

/// The unique n with delta = 0, if (r + 1) divides sum_i C(d_i + r, r).
std::optional<int> solve_ambient_dimension(const MultiDegree& d, int r);

/// Streams every problem within bounds with delta = 0 and delta_minus >= 0,
/// in lexicographic (degrees, n, r) order.
void for_each_problem(const SearchBounds& bounds,
                      const std::function<void(const FanoProblem&)>& visit);

std::vector<FanoProblem> enumerate_problems(const SearchBounds& bounds);

enum class BoundaryCase { none, cubic_surface, two_quadrics };

/// Detects n - 2r - s = 0 and which of the two boundary families applies.
/// Requires delta = 0.
BoundaryCase boundary_case(const FanoProblem& p);

}  // namespace fano

#endif
