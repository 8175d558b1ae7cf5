#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistbench {

// One refuting variable assignment. `clause` names the failing clause when the
// witness comes out of a suite; `lhs`/`rhs` hold the evaluated side values when
// the refuted matrix is an equation or inequation.
struct Witness {
  std::string clause;
  std::vector<std::pair<std::string, int>> assignment;  // in binding order
  std::optional<int> lhs;
  std::optional<int> rhs;

  bool operator==(const Witness&) const = default;
};

// Pass/fail verdict of a property check. On fail, `witness` is the first
// witness found (clause order, then lexicographic assignment order);
// `all_witnesses` is filled only when exhaustive reporting was requested.
struct CheckReport {
  bool pass = true;
  std::optional<Witness> witness;
  std::vector<Witness> all_witnesses;
  std::string note;

  static CheckReport ok() { return CheckReport{}; }
  static CheckReport fail(Witness w) {
    CheckReport r;
    r.pass = false;
    r.witness = std::move(w);
    return r;
  }
};

}  // namespace twistbench
