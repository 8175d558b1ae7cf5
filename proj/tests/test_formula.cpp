#include "doctest.h"
#include "fixtures.hpp"
#include "twistbench/error.hpp"
#include "twistbench/formula.hpp"

using namespace twistbench;

TEST_CASE("term construction and evaluation") {
  Algebra k = fixtures::make_kite();
  // a /\ (b => c) at a=1, b=y, c=z: himp(y, z) = z, 1 /\ z = z.
  Term t = tapp(Op::meet,
                {tvar("a"), tapp(Op::himp, {tvar("b"), tvar("c")})});
  Env env;
  env.push("a", 4);
  env.push("b", 2);
  env.push("c", 3);
  CHECK(eval_term(k, t, env) == 3);

  CHECK(eval_term(k, tconst(ConstName::bot), env) == 0);
  CHECK(eval_term(k, tconst(ConstName::top), env) == 4);

  CHECK_THROWS_WITH_AS(eval_term(k, tvar("missing"), env),
                       doctest::Contains("unbound variable"), Error);
  CHECK_THROWS_WITH_AS(eval_term(k, tapp(Op::neg, {tvar("a")}), env),
                       doctest::Contains("absent"), Error);
  CHECK_THROWS_WITH_AS(tapp(Op::meet, {tvar("a")}),
                       doctest::Contains("arity mismatch"), Error);
  CHECK_THROWS_WITH_AS(tapp(Op::exists, {tvar("a"), tvar("b")}),
                       doctest::Contains("arity mismatch"), Error);
}

TEST_CASE("environment shadows from the innermost binding") {
  Env env;
  env.push("x", 1);
  env.push("x", 2);
  CHECK(env.lookup("x") == 2);
  env.pop();
  CHECK(env.lookup("x") == 1);
  CHECK_FALSE(env.lookup("y").has_value());
}

TEST_CASE("free_vars respects quantifier scope") {
  Formula f = f_forall(
      "x", f_or(f_eq(tvar("x"), tvar("y")),
                f_exists("z", f_le(tvar("z"), tvar("x")))));
  CHECK(free_vars(f) == std::set<std::string>{"y"});
  CHECK(free_vars(f_eq(tvar("x"), tvar("x"))) == std::set<std::string>{"x"});
}

TEST_CASE("closed evaluation with quantifiers and guards") {
  Algebra g = fixtures::make_three_chain_godel();
  CHECK(eval_closed(g, f_forall("x", f_exists("y", f_le(tvar("x"), tvar("y"))))));
  CHECK(eval_closed(g, f_exists("x", f_forall("y", f_le(tvar("y"), tvar("x"))))));
  CHECK_FALSE(eval_closed(g, f_forall("x", f_eq(tvar("x"), tconst(ConstName::bot)))));

  // Guard !x = 0 admits exactly {m, 1}; on that range "x is not bottom"
  // holds, while unguarded it fails at x = 0.
  Formula guard = f_eq(tapp(Op::hneg, {tvar("x")}), tconst(ConstName::bot));
  Formula body = f_not(f_eq(tvar("x"), tconst(ConstName::bot)));
  CHECK(eval_closed(g, f_forall("x", guard, body)));
  CHECK_FALSE(eval_closed(g, f_forall("x", body)));
  CHECK(eval_closed(g, f_exists("x", guard, f_le(tvar("x"), tvar("x")))));
  // An unsatisfiable guard empties an existential range.
  Formula never = f_not(f_le(tvar("x"), tvar("x")));
  CHECK_FALSE(eval_closed(g, f_exists("x", never, f_le(tvar("x"), tvar("x")))));
}

TEST_CASE("check_formula reports the least refuting prefix assignment") {
  Algebra k = fixtures::make_kite();
  // A(Ex \/ y) = Ex \/ Ay
  Term lhs = tapp(Op::forall,
                  {tapp(Op::join, {tapp(Op::exists, {tvar("x")}), tvar("y")})});
  Term rhs = tapp(Op::join,
                  {tapp(Op::exists, {tvar("x")}), tapp(Op::forall, {tvar("y")})});
  Formula shift = f_forall("x", f_forall("y", f_eq(lhs, rhs)));

  CheckReport first = check_formula(k, shift);
  REQUIRE_FALSE(first.pass);
  REQUIRE(first.witness.has_value());
  std::vector<std::pair<std::string, int>> expected = {{"x", 1}, {"y", 2}};
  CHECK(first.witness->assignment == expected);
  CHECK(first.witness->lhs == 4);
  CHECK(first.witness->rhs == 3);
  CHECK(witness_refutes(k, shift, *first.witness));

  CheckReport all = check_formula(k, shift, /*report_all=*/true);
  REQUIRE(all.all_witnesses.size() == 2);
  CHECK(all.all_witnesses[0].assignment == expected);
  std::vector<std::pair<std::string, int>> second = {{"x", 3}, {"y", 2}};
  CHECK(all.all_witnesses[1].assignment == second);
  for (const Witness& w : all.all_witnesses) CHECK(witness_refutes(k, shift, w));

  Witness fake;
  fake.assignment = {{"x", 0}, {"y", 0}};
  CHECK_FALSE(witness_refutes(k, shift, fake));
}

TEST_CASE("check_formula walks guards in the prefix") {
  Algebra g = fixtures::make_three_chain_godel();
  Formula f = f_forall("x", f_le(tvar("x"), tconst(ConstName::top)),
                       f_eq(tvar("x"), tconst(ConstName::bot)));
  // Everything is below top, so the guard admits all three elements.
  CheckReport r = check_formula(g, f, /*report_all=*/true);
  REQUIRE_FALSE(r.pass);
  CHECK(r.all_witnesses.size() == 2);  // m and 1 refute; 0 satisfies

  // A guard that only admits the bottom makes the same matrix pass.
  Formula f2 = f_forall("x", f_le(tvar("x"), tconst(ConstName::bot)),
                        f_eq(tvar("x"), tconst(ConstName::bot)));
  CHECK(check_formula(g, f2).pass);
}

TEST_CASE("witness sides drill through conjunctions") {
  Algebra g = fixtures::make_three_chain_godel();
  Formula f = f_forall(
      "x", f_and(f_eq(tconst(ConstName::top), tconst(ConstName::top)),
                 f_eq(tvar("x"), tconst(ConstName::bot))));
  CheckReport r = check_formula(g, f);
  REQUIRE_FALSE(r.pass);
  CHECK(r.witness->assignment ==
        std::vector<std::pair<std::string, int>>{{"x", 1}});
  CHECK(r.witness->lhs == 1);  // sides come from the failing conjunct
  CHECK(r.witness->rhs == 0);
}

TEST_CASE("check_formula rejects open formulas") {
  Algebra g = fixtures::make_three_chain_godel();
  CHECK_THROWS_WITH_AS(check_formula(g, f_eq(tvar("x"), tvar("x"))),
                       doctest::Contains("not closed"), Error);
}
