#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fkt/errors.hpp"

namespace fkt {

// One recorded statement about a subject (a diagram, complex or pair of
// them).  Predicates:
//   odd, iteratively_odd (order in `number`), all_mixed, components (number),
//   elementary_slice, slice, slice_exterior_only, slice_no_exterior_triples,
//   connected_oriented                                    -- boolean `flag`
//   genus_bound: text=kind (g|g0|gprime|gel), text2=rel (le|ge), number=value
//   has_crossing_cusp_line, stably_even, good_smoothing_slice,
//   bad_smoothing_component_slice                         -- text=crossing
//   cobordism: text=other subject, text2=kind
//              (general|elementary|no_triples_no_cusp_boundary), number=genus
//   smoothing_of: text=parent subject
struct Fact {
  std::string subject;
  std::string predicate;
  std::optional<bool> flag;
  std::optional<int> number;
  std::optional<std::string> text;
  std::optional<std::string> text2;
  std::string provenance = "given";

  std::string key() const;  // identity up to value
  bool operator==(const Fact&) const = default;
};

struct Deduction {
  int fact_index = 0;  // index into DeductionResult::facts
  std::string rule_id;
  std::string citation;
  std::vector<int> premises;
};

struct DeductionResult {
  std::vector<Fact> facts;       // given facts first, then derived ones
  std::vector<Deduction> deductions;
};

// Closure of the rule set over the given facts.  Throws PreconditionError on
// contradictory inputs.  Idempotent: re-running on the closure adds nothing.
DeductionResult deduce(std::vector<Fact> given);

std::vector<Fact> parse_facts_text(const std::string& json_text);
std::vector<Fact> parse_facts_file(const std::string& path);
std::string serialize_deductions(const DeductionResult& r);

}  // namespace fkt
