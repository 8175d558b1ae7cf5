#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistbench/algebra.hpp"
#include "twistbench/congruence.hpp"
#include "twistbench/formula.hpp"
#include "twistbench/report.hpp"
#include "twistbench/twist.hpp"

namespace twistbench {

// One sparse table entry as written in a .alg file: `a->v` or `(a,b)->v`.
struct OpMapping {
  std::vector<std::string> args;  // one or two labels
  std::string value;

  bool operator==(const OpMapping&) const = default;
};

// One `op NAME: ...` declaration, in declaration order. Only exists, forall,
// himp, nimp and neg may be declared; join/meet come from the order and
// hneg (plus forall on the Nelson side) are derived.
struct OpDecl {
  std::string name;
  bool binary = false;
  std::vector<OpMapping> entries;
  int line = 1, col = 1;  // of the `op` keyword; not part of identity

  bool operator==(const OpDecl& o) const {
    return name == o.name && binary == o.binary && entries == o.entries;
  }
};

// In-memory form of a .alg file, with labels still unresolved to indices.
// Section order in the file is fixed: elements, covers, op*, const*, kind.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<OpDecl> ops;
  std::vector<std::pair<std::string, std::string>> constants;
  std::string kind;  // heyting|godel|monadic-godel|nelson|monadic-nelson|raw

  // Source locations for elaboration-time diagnostics; not part of identity.
  int alg_line = 1, alg_col = 1;
  int covers_line = 1, covers_col = 1;
  std::vector<std::pair<int, int>> const_locs;

  bool operator==(const AlgebraSpec& o) const {
    return name == o.name && elements == o.elements && covers == o.covers &&
           ops == o.ops && constants == o.constants && kind == o.kind;
  }
};

// Parses the `.alg` grammar. Throws ParseError (with 1-based line/column) on
// syntax errors, unknown labels, unknown or non-declarable operations,
// duplicate declarations, self-covers, and unknown kinds.
AlgebraSpec parse_spec(const std::string& text);

// Canonical text form; parse_spec(write_spec(s)) == s for every valid spec.
std::string write_spec(const AlgebraSpec& spec);

// Spec whose elaboration reproduces `a` table-for-table. Emits Hasse covers,
// every non-derivable operation, and the center constant. `kind` must be one
// of the six declarable kinds; for the Heyting-family kinds the implication
// is left implicit (it is re-derived from the order on elaboration).
AlgebraSpec spec_from_algebra(const Algebra& a, const std::string& kind);

// Result of elaborating a spec: the constructed algebra plus the report of
// the declared kind's suite (a passed placeholder for kind raw).
struct Elaboration {
  Algebra algebra;
  CheckReport report;
  std::string suite;  // empty for kind raw
};

// Builds the poset and lattice, densifies the declared tables, derives the
// implication for Heyting-family kinds (and for raw when possible), then runs
// the declared kind's suite. A failing suite throws SuiteFailure unless
// `lenient`, in which case the failing report is returned alongside the
// algebra. Structural problems throw ParseError located at the offending
// declaration.
Elaboration elaborate(const AlgebraSpec& spec, bool lenient = false);

// parse_spec + elaborate, returning just the algebra.
Algebra load_algebra(const std::string& text, bool lenient = false);

// Parses the formula surface syntax:
//   terms     x | 0 | 1 | c | ~t | !t | E t | A t | t /\ t | t \/ t
//             | t => t | t -> t | (t)
//   formulas  t = t | t <= t | not f | f & f | f "|" f | f ==> f | (f)
//             | forall v [guard]. f | exists v [guard]. f
// Unary operators bind tightest, then /\, \/, and the implications; formula
// binding is not < & < | < ==>, with both implications right-associative.
Formula parse_formula(const std::string& text);

// Canonical JSON (sorted keys, two-space indent, trailing newline). Element
// labels are preserved; operation tables are nested arrays of labels and
// include the derived operations.
std::string export_json(const Algebra& a);
std::string export_json(const TwistAlgebra& t);
std::string export_json(const ConLattice& c);
// With `labels`, witness values and assignments are rendered as that
// algebra's labels; without, as raw element indices.
std::string export_json(const CheckReport& r, const Algebra* labels = nullptr);

// Reads back the JSON written by export_json for an Algebra, or the "result"
// object of a TwistAlgebra file. Derived tables present in the JSON are
// checked against re-derivation rather than trusted.
Algebra import_algebra_json(const std::string& text);

}  // namespace twistbench
