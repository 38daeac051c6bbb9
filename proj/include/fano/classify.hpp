#ifndef FANO_CLASSIFY_HPP
#define FANO_CLASSIFY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/catalog.hpp"
#include "fano/degree.hpp"
#include "fano/transitivity.hpp"
#include "json.hpp"

namespace fano {

enum class MonodromyKind {
  empty,
  positive_dimensional,
  weyl_e6,
  weyl_d,
  contains_alternating,
  undetermined,
};

const char* to_string(MonodromyKind kind);

struct ClassifyOptions {
  DegreeOptions degree;
  // estimated-work ceiling for computing N during classification
  double work_limit = 2e8;
  enum class NPolicy { automatic, exact, mod4, floor_only };
  NPolicy n_policy = NPolicy::automatic;
  bool char_two = false;
};

struct MonodromyClassification {
  explicit MonodromyClassification(FanoProblem p) : problem(std::move(p)) {}

  FanoProblem problem;
  long long delta = 0;
  long long delta_lower = 0;  // min(delta, n - 2r - s)
  MonodromyKind kind = MonodromyKind::undetermined;

  std::optional<int> weyl_k;          // WeylD parameter
  std::optional<BigInt> group_order;  // WeylE6 and WeylD

  std::optional<DegreeKnowledge> knowledge;       // what is known about N
  std::optional<DegreeResult> degree_result;      // exact N, when computed
  std::optional<ModularDegreeResult> residue_result;

  std::optional<TransitivityEvidence> transitivity;
  std::optional<CfsgDecision> cfsg;

  std::vector<std::string> assumptions;
  std::string undetermined_reason;  // set when kind == undetermined
};

/// Total decision procedure: Empty / PositiveDimensional via the dimension
/// filter, the two Weyl-group boundary families, and otherwise an
/// alternating-group certificate chain. Never claims the full symmetric
/// group. Reports Undetermined instead of asserting anything unchecked.
MonodromyClassification classify(const FanoProblem& p, const ClassifyOptions& = {});

struct ClassifySummary {
  long long total = 0;
  std::map<MonodromyKind, long long> counts;
  std::vector<std::string> undetermined_keys;
};

/// Enumerate within bounds, classify each problem, and count kinds. The
/// optional sink sees every classification in enumeration order.
ClassifySummary classify_all(
    const SearchBounds& bounds, const ClassifyOptions& options = {},
    const std::function<void(const MonodromyClassification&)>& sink = nullptr);

nlohmann::ordered_json classification_json(const MonodromyClassification& c);

}  // namespace fano

#endif
