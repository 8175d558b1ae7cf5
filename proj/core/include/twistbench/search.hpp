#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistbench/algebra.hpp"
#include "twistbench/formula.hpp"
#include "twistbench/report.hpp"

namespace twistbench {

// One quantifier structure over a fixed Heyting-family base. `provenance` is
// "subalgebra-driven" (tables computed from a candidate range B as
// Ex = least element of B above x, Ax = greatest element of B below x) or
// "raw" (direct table search). Emitted assignments always re-pass
// monadic-heyting in addition to the requested filter.
struct QuantifierAssignment {
  UnaryTable exists;
  UnaryTable forall;
  std::string provenance;

  friend bool operator==(const QuantifierAssignment&,
                         const QuantifierAssignment&) = default;
};

enum class SearchMode { Subalgebra, Raw };

SearchMode search_mode_from_name(const std::string& name);  // throws Error

// Copy of g with the assignment's quantifier tables attached (replacing any
// tables g already carries).
Algebra with_quantifiers(const Algebra& g, const QuantifierAssignment& qa);

// All quantifier structures over g that pass monadic-heyting and the filter
// suite. Subalgebra mode walks candidate ranges B containing 0 and 1 in
// ascending bitmask order and skips ranges where some least-above/
// greatest-below element is missing. Raw mode searches exists tables first
// (pruned to closure operators fixing 0), then compatible forall tables, in
// lexicographic table order; it refuses carriers larger than raw_cap.
std::vector<QuantifierAssignment> enumerate_quantifier_pairs(
    const Algebra& g, SearchMode mode, const std::string& filter_suite,
    int raw_cap = 6);

// Least refuting assignment of a closed formula in variable-then-carrier
// lexicographic order, or nothing when the formula holds.
std::optional<Witness> find_counterexample(const Algebra& a, const Formula& f);

}  // namespace twistbench
