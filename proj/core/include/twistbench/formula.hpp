#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twistbench/algebra.hpp"
#include "twistbench/report.hpp"

namespace twistbench {

// Small AST for terms over the signature catalog.
struct Term {
  enum class Kind { Var, Const, App };
  Kind kind = Kind::Var;
  std::string var;
  ConstName cname = ConstName::bot;
  Op op = Op::join;
  std::vector<Term> args;
};

Term tvar(std::string name);
Term tconst(ConstName c);
Term tapp(Op op, std::vector<Term> args);  // throws on arity mismatch

// Formulas: equations and inequations between terms, propositional
// connectives, and guarded quantifiers ranging over the carrier.
struct Formula {
  enum class Kind { Eq, Le, Not, And, Or, Implies, ForAll, Exists };
  Kind kind = Kind::Eq;
  Term lhs, rhs;             // Eq / Le
  std::vector<Formula> sub;  // Not: 1; And/Or/Implies: 2; quantifier: guard?, body
  std::string var;           // quantifiers
  bool has_guard = false;

  const Formula& body() const { return sub.back(); }
  const Formula& guard() const { return sub.front(); }
};

Formula f_eq(Term l, Term r);
Formula f_le(Term l, Term r);
Formula f_not(Formula f);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_forall(std::string var, Formula body);
Formula f_forall(std::string var, Formula guard, Formula body);
Formula f_exists(std::string var, Formula body);
Formula f_exists(std::string var, Formula guard, Formula body);

// Variable environment; bindings shadow from the back.
struct Env {
  std::vector<std::pair<std::string, int>> bindings;

  void push(const std::string& var, int value) { bindings.emplace_back(var, value); }
  void pop() { bindings.pop_back(); }
  std::optional<int> lookup(std::string_view var) const;
};

std::set<std::string> free_vars(const Formula& f);
std::set<std::string> free_vars(const Term& t);

// Value of a term by structural recursion over the tables. Throws Error on
// unbound variables or operations absent from the algebra's signature subset.
int eval_term(const Algebra& a, const Term& t, const Env& env);

// Truth of a formula under env; quantifiers enumerate the carrier in index
// order and guards filter the range.
bool eval_formula(const Algebra& a, const Formula& f, Env& env);
bool eval_closed(const Algebra& a, const Formula& f);

// Pass iff the (closed) formula holds. On fail the witness binds the leading
// universally quantified prefix at the lexicographically least refuting
// assignment; report_all collects every refuting prefix assignment.
CheckReport check_formula(const Algebra& a, const Formula& f,
                          bool report_all = false);

// Re-evaluates the formula with the witness's prefix assignment bound;
// a genuine witness makes the remainder false.
bool witness_refutes(const Algebra& a, const Formula& f, const Witness& w);

}  // namespace twistbench
