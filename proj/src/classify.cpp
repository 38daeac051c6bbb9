#include "fano/classify.hpp"

#include "fano/quadrics.hpp"

namespace fano {

const char* to_string(MonodromyKind kind) {
  switch (kind) {
    case MonodromyKind::empty: return "Empty";
    case MonodromyKind::positive_dimensional: return "PositiveDimensional";
    case MonodromyKind::weyl_e6: return "WeylE6";
    case MonodromyKind::weyl_d: return "WeylD";
    case MonodromyKind::contains_alternating: return "ContainsAlternating";
    case MonodromyKind::undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

bool floor_exceeds_24(const FanoProblem& p) {
  // N >= prod d_i^(r+1) for delta = 0 problems
  return divisibility_certificate(p) > 24;
}

// Exact N is worth computing when the cost model stays under both the
// classification work ceiling and the long-run gate.
bool exact_affordable(const FanoProblem& p, const ClassifyOptions& options) {
  DegreeOptions probe = options.degree;
  double work = estimate_work(p, select_method(p, probe));
  if (work > options.work_limit) return false;
  return work <= kLongRunWork || options.degree.allow_long_running;
}

bool mod4_affordable(const FanoProblem& p, const ClassifyOptions& options) {
  double work = estimate_work(p, DegreeMethod::kronecker);
  if (work > options.work_limit) return false;
  return work <= kLongRunWork || options.degree.allow_long_running;
}

bool cache_has(const FanoProblem& p, const DegreeOptions& options) {
  return options.use_cache && options.cache_path &&
         cache_lookup(*options.cache_path, p.key()).has_value();
}

void attach_exact(MonodromyClassification& out, const FanoProblem& p,
                  const ClassifyOptions& options) {
  out.degree_result = fano_degree(p, options.degree);
  DegreeKnowledge k;
  k.kind = DegreeKnowledge::Kind::exact;
  k.exact_value = out.degree_result->value;
  k.exceeds_24 = k.exact_value > 24;
  out.knowledge = std::move(k);
}

void attach_mod4(MonodromyClassification& out, const FanoProblem& p,
                 const ClassifyOptions& options) {
  out.residue_result = fano_degree_mod(p, 4, options.degree);
  DegreeKnowledge k;
  k.kind = DegreeKnowledge::Kind::residue_mod4;
  k.residue = static_cast<unsigned>(out.residue_result->residue);
  k.exceeds_24 = floor_exceeds_24(p);
  out.knowledge = std::move(k);
}

void attach_floor(MonodromyClassification& out, const FanoProblem& p) {
  DegreeKnowledge k;
  k.kind = DegreeKnowledge::Kind::floor_only;
  k.exceeds_24 = floor_exceeds_24(p);
  out.knowledge = std::move(k);
}

}  // namespace

MonodromyClassification classify(const FanoProblem& p, const ClassifyOptions& options) {
  MonodromyClassification out(p);
  out.delta = expected_dimension(p);
  out.delta_lower = delta_minus(p);

  if (out.delta_lower < 0) {
    out.kind = MonodromyKind::empty;
    return out;
  }
  if (out.delta > 0) {
    out.kind = MonodromyKind::positive_dimensional;
    return out;
  }

  switch (boundary_case(p)) {
    case BoundaryCase::cubic_surface: {
      out.kind = MonodromyKind::weyl_e6;
      out.group_order = BigInt(51840);
      DegreeKnowledge k;
      k.kind = DegreeKnowledge::Kind::exact;
      k.exact_value = 27;
      k.exceeds_24 = true;
      out.knowledge = std::move(k);
      return out;
    }
    case BoundaryCase::two_quadrics: {
      if (options.char_two) {
        out.kind = MonodromyKind::undetermined;
        out.undetermined_reason =
            "the two-quadrics structure theory assumes characteristic != 2";
        return out;
      }
      int k_param = p.r;  // n = 2k + 2
      out.kind = MonodromyKind::weyl_d;
      out.weyl_k = k_param;
      out.group_order = weyl_d_order(k_param);
      out.assumptions.push_back("char K != 2");
      DegreeKnowledge k;
      k.kind = DegreeKnowledge::Kind::exact;
      k.exact_value = BigInt(1) << (2 * k_param + 2);
      k.exceeds_24 = k.exact_value > 24;
      out.knowledge = std::move(k);
      return out;
    }
    case BoundaryCase::none:
      break;
  }

  out.transitivity = transitivity_evidence(p);
  if (out.transitivity->transitivity < 3) {
    out.kind = MonodromyKind::undetermined;
    out.undetermined_reason = "no 3-transitivity certificate: " +
                              out.transitivity->certificates.back().certificate +
                              " is not satisfied";
    return out;
  }

  switch (options.n_policy) {
    case ClassifyOptions::NPolicy::exact:
      attach_exact(out, p, options);
      break;
    case ClassifyOptions::NPolicy::mod4:
      attach_mod4(out, p, options);
      break;
    case ClassifyOptions::NPolicy::floor_only:
      attach_floor(out, p);
      break;
    case ClassifyOptions::NPolicy::automatic:
      if (cache_has(p, options.degree) || exact_affordable(p, options)) {
        attach_exact(out, p, options);
      } else if (out.transitivity->transitivity >= 4) {
        attach_floor(out, p);
      } else if (mod4_affordable(p, options)) {
        attach_mod4(out, p, options);
      } else {
        attach_floor(out, p);
      }
      break;
  }

  out.cfsg = cfsg_branch(out.transitivity->transitivity, *out.knowledge);
  if (out.cfsg->probabilistic) {
    out.assumptions.push_back("a primality verdict relies on 64 probabilistic rounds");
  }
  if (out.cfsg->satisfied) {
    out.kind = MonodromyKind::contains_alternating;
  } else {
    out.kind = MonodromyKind::undetermined;
    std::string failing = "cfsg";
    for (const auto& check : out.cfsg->checks) {
      if (!check.satisfied) {
        failing = check.certificate;
        break;
      }
    }
    out.undetermined_reason = "no classification branch closes: " + failing;
  }
  return out;
}

ClassifySummary classify_all(
    const SearchBounds& bounds, const ClassifyOptions& options,
    const std::function<void(const MonodromyClassification&)>& sink) {
  ClassifySummary summary;
  for_each_problem(bounds, [&](const FanoProblem& p) {
    MonodromyClassification c = classify(p, options);
    summary.total += 1;
    summary.counts[c.kind] += 1;
    if (c.kind == MonodromyKind::undetermined) {
      summary.undetermined_keys.push_back(p.key());
    }
    if (sink) sink(c);
  });
  return summary;
}

namespace {

nlohmann::ordered_json record_json(const CertificateRecord& record) {
  nlohmann::ordered_json j;
  j["lemma"] = record.certificate;
  j["values"] = nlohmann::ordered_json::array();
  for (const auto& v : record.values) j["values"].push_back(v.get_str());
  j["satisfied"] = record.satisfied;
  j["detail"] = record.detail;
  return j;
}

}  // namespace

nlohmann::ordered_json classification_json(const MonodromyClassification& c) {
  nlohmann::ordered_json j;
  j["problem"] = {{"d", c.problem.degrees.values()},
                  {"n", c.problem.n},
                  {"r", c.problem.r}};
  j["delta"] = c.delta;
  j["delta_minus"] = c.delta_lower;
  j["kind"] = to_string(c.kind);

  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  if (c.weyl_k) parameters["k"] = *c.weyl_k;
  if (c.group_order) parameters["group_order"] = c.group_order->get_str();
  j["parameters"] = parameters;

  if (c.knowledge) {
    switch (c.knowledge->kind) {
      case DegreeKnowledge::Kind::exact:
        j["N"] = c.knowledge->exact_value.get_str();
        break;
      case DegreeKnowledge::Kind::residue_mod4:
        j["N"] = {{"residue", c.knowledge->residue}, {"modulus", 4}};
        break;
      case DegreeKnowledge::Kind::floor_only:
        j["N_floor"] = c.knowledge->exceeds_24 ? "exceeds 24" : "unknown";
        break;
    }
  }
  if (c.degree_result) {
    j["degree_method"] =
        c.degree_result->method == DegreeMethod::naive ? "naive" : "kronecker";
    if (c.degree_result->kronecker_base) j["base"] = *c.degree_result->kronecker_base;
    j["from_cache"] = c.degree_result->from_cache;
  }

  j["evidence"] = nlohmann::ordered_json::array();
  if (c.transitivity) {
    for (const auto& record : c.transitivity->certificates) {
      j["evidence"].push_back(record_json(record));
    }
    j["transitivity"] = c.transitivity->transitivity;
    j["route"] = c.transitivity->route == TransitivityEvidence::Route::three_quadrics
                     ? "three-quadrics"
                     : "generic";
  }
  if (c.cfsg) {
    for (const auto& record : c.cfsg->checks) {
      j["evidence"].push_back(record_json(record));
    }
    if (c.cfsg->satisfied) j["cfsg_branch"] = c.cfsg->branch;
  }

  j["assumptions"] = c.assumptions;
  if (c.kind == MonodromyKind::undetermined) {
    j["undetermined_reason"] = c.undetermined_reason;
  }
  return j;
}

}  // namespace fano
