#pragma once

#include <string>
#include <vector>

#include "twistbench/algebra.hpp"
#include "twistbench/error.hpp"
#include "twistbench/formula.hpp"
#include "twistbench/report.hpp"

namespace twistbench {

// One named clause of an axiom suite.
struct Clause {
  std::string label;
  Formula formula;
};

// A named battery of closed formulas together with the signature subset the
// formulas mention.
struct Suite {
  std::string id;
  std::vector<Clause> clauses;
  std::vector<Op> required_ops;
  std::vector<ConstName> required_consts;
};

// Thrown when an operation insists on an algebra that passes a suite and the
// algebra does not; carries the full report of the violated suite.
class SuiteFailure : public Error {
 public:
  SuiteFailure(std::string suite_id, CheckReport report, std::string detail);

  std::string suite_id;
  CheckReport report;
};

// Stable suite ids in catalog order. The opt-in variant clause suite
// "n3-as-printed" resolves through suite() but is not listed here.
const std::vector<std::string>& suite_ids();

// Catalog lookup; throws Error on an unknown id.
const Suite& suite(const std::string& id);

// "x↦z, y↦y" plus side values when present, using the algebra's labels.
std::string describe_witness(const Algebra& a, const Witness& w);

// Runs the suite's clauses in catalog order. The verdict's witnesses carry
// the clause label; without report_all the first failing clause short-circuits,
// with report_all every failing clause contributes its full witness list.
// Throws Error when the algebra lacks a required operation or constant.
CheckReport check_suite(const Algebra& a, const std::string& id,
                        bool report_all = false);

// check_suite that throws SuiteFailure instead of returning a failing report.
CheckReport require_suite(const Algebra& a, const std::string& id);

// Fixpoint images of the two quantifiers plus their structural health checks:
// image equality, closure of the image under every present operation, and the
// least-upper/greatest-lower characterization of the quantifiers.
struct QuantifierRange {
  std::vector<int> exists_image;  // sorted carrier indices
  std::vector<int> forall_image;
  CheckReport report;
};

QuantifierRange quantifier_range(const Algebra& a);

// Congruence-structure classification via the shape of the exists-image.
enum class SiStatus { NotFsi, FsiNotSi, Si };

std::string_view si_status_name(SiStatus s);

SiStatus check_si_status(const Algebra& a);

}  // namespace twistbench
