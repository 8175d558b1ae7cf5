#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "twistbench/error.hpp"
#include "twistbench/suites.hpp"

using namespace twistbench;

TEST_CASE("suite catalog exposes the stable ids") {
  const auto& ids = suite_ids();
  std::vector<std::string> expected = {
      "heyting",         "godel",   "monadic-heyting", "monadic-godel",
      "kleene-centered", "nelson",  "rn-residuation",  "nelson-prelinear",
      "monadic-nelson",  "lemma23-basic", "lemma24",   "lemma33",
      "ck"};
  CHECK(ids == expected);
  for (const auto& id : ids) CHECK(suite(id).id == id);
  CHECK(suite("n3-as-printed").clauses.size() == 1);  // opt-in, not listed
  CHECK_THROWS_WITH_AS(suite("nope"), doctest::Contains("unknown suite"), Error);
}

TEST_CASE("kite passes the Heyting-family suites") {
  Algebra k = fixtures::make_kite();
  CHECK(check_suite(k, "heyting").pass);
  CHECK(check_suite(k, "godel").pass);
  CHECK(check_suite(k, "monadic-heyting").pass);
}

TEST_CASE("kite fails monadic-godel exactly at the shift clause") {
  Algebra k = fixtures::make_kite();
  CheckReport r = check_suite(k, "monadic-godel");
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->clause == "quantifier-shift");
  std::vector<std::pair<std::string, int>> expected = {{"x", 1}, {"y", 2}};
  CHECK(r.witness->assignment == expected);
  CHECK(r.witness->lhs == 4);  // forall(exists x \/ y) = 1
  CHECK(r.witness->rhs == 3);  // exists x \/ forall y = z

  CheckReport all = check_suite(k, "monadic-godel", /*report_all=*/true);
  REQUIRE(all.all_witnesses.size() == 2);
  CHECK(all.all_witnesses[0].assignment == expected);
  std::vector<std::pair<std::string, int>> second = {{"x", 3}, {"y", 2}};
  CHECK(all.all_witnesses[1].assignment == second);

  // Every reported witness genuinely refutes its clause.
  const Suite& s = suite("monadic-godel");
  for (const Witness& w : all.all_witnesses) {
    auto it = std::find_if(s.clauses.begin(), s.clauses.end(),
                           [&](const Clause& c) { return c.label == w.clause; });
    REQUIRE(it != s.clauses.end());
    CHECK(witness_refutes(k, it->formula, w));
  }

  CHECK(describe_witness(k, *r.witness) == "x↦x, y↦y (lhs=1, rhs=z)");
}

TEST_CASE("missing structure raises before any clause runs") {
  Algebra g = fixtures::make_three_chain_godel();
  CHECK(check_suite(g, "heyting").pass);
  CHECK(check_suite(g, "godel").pass);
  CHECK_THROWS_WITH_AS(check_suite(g, "monadic-heyting"),
                       doctest::Contains("requires operation exists"), Error);
  CHECK_THROWS_WITH_AS(check_suite(g, "nelson"),
                       doctest::Contains("requires operation"), Error);

  Lattice l = fixtures::make_chain(3);
  AlgebraInput in;
  in.unary["neg"] = {2, 1, 0};
  Algebra no_center = make_algebra(l, in, "bare");
  CHECK_THROWS_WITH_AS(check_suite(no_center, "kleene-centered"),
                       doctest::Contains("requires constant center"), Error);
}

TEST_CASE("the Nelson chain passes the Nelson-family suites") {
  Algebra n = fixtures::make_three_chain_nelson();
  for (const char* id : {"kleene-centered", "nelson", "rn-residuation",
                         "nelson-prelinear", "monadic-nelson", "lemma33", "ck"})
    CHECK_MESSAGE(check_suite(n, id).pass, id);
}

TEST_CASE("the printed implication variant fails on the Nelson chain") {
  Algebra n = fixtures::make_three_chain_nelson();
  CheckReport r = check_suite(n, "n3-as-printed");
  REQUIRE_FALSE(r.pass);

  // Independent oracle: scan the tables directly for the first refuting
  // triple of p -> (p -> r) = (p /\ q) -> r.
  const BinaryTable& imp = *n.nimp;
  const BinaryTable& meet = n.lat.meet;
  Witness expected;
  for (int p = 0; p < n.size() && expected.assignment.empty(); ++p)
    for (int q = 0; q < n.size() && expected.assignment.empty(); ++q)
      for (int rr = 0; rr < n.size(); ++rr) {
        int lhs = imp[p][imp[p][rr]];
        int rhs = imp[meet[p][q]][rr];
        if (lhs != rhs) {
          expected.assignment = {{"p", p}, {"q", q}, {"r", rr}};
          expected.lhs = lhs;
          expected.rhs = rhs;
          break;
        }
      }
  REQUIRE_FALSE(expected.assignment.empty());
  CHECK(r.witness->assignment == expected.assignment);
  CHECK(r.witness->lhs == expected.lhs);
  CHECK(r.witness->rhs == expected.rhs);
  // Frozen values: first refutation at p=1, q=0, r=0 with sides 0 and 1.
  std::vector<std::pair<std::string, int>> frozen = {{"p", 2}, {"q", 0}, {"r", 0}};
  CHECK(r.witness->assignment == frozen);
  CHECK(r.witness->lhs == 0);
  CHECK(r.witness->rhs == 2);
}

TEST_CASE("bool4 with identity quantifiers is monadic Godel") {
  Algebra b = fixtures::make_bool4();
  CHECK(check_suite(b, "godel").pass);

  AlgebraInput in;
  in.binary["himp"] = *b.himp;
  in.unary["exists"] = {0, 1, 2, 3};
  in.unary["forall"] = {0, 1, 2, 3};
  Algebra mb = make_algebra(b.lat, in, "bool4q");
  CHECK(check_suite(mb, "monadic-godel").pass);
  CHECK(check_suite(mb, "lemma23-basic").pass);
  CHECK(check_suite(mb, "lemma24").pass);
  CHECK(check_si_status(mb) == SiStatus::NotFsi);
}

TEST_CASE("quantifier_range computes fixpoint images") {
  Algebra k = fixtures::make_kite();
  QuantifierRange qr = quantifier_range(k);
  CHECK(qr.exists_image == std::vector<int>{0, 3, 4});
  CHECK(qr.forall_image == std::vector<int>{0, 3, 4});
  CHECK(qr.report.pass);

  Algebra mg = fixtures::make_three_chain_godel(/*with_quantifiers=*/true);
  QuantifierRange full = quantifier_range(mg);
  CHECK(full.exists_image == std::vector<int>{0, 1, 2});
  CHECK(full.report.pass);

  // Coarsest nontrivial quantifiers collapse the image to the bounds.
  Lattice l = fixtures::make_chain(3);
  AlgebraInput in;
  in.binary["himp"] = derive_himp(l);
  in.unary["exists"] = {0, 2, 2};
  in.unary["forall"] = {0, 0, 2};
  Algebra simplest = make_algebra(l, in, "simplest");
  QuantifierRange sr = quantifier_range(simplest);
  CHECK(sr.exists_image == std::vector<int>{0, 2});
  CHECK(sr.report.pass);
  CHECK(check_si_status(simplest) == SiStatus::Si);

  CHECK_THROWS_WITH_AS(quantifier_range(fixtures::make_three_chain_godel()),
                       doctest::Contains("needs both"), Error);
}

TEST_CASE("quantifier_range flags broken tables") {
  Poset p = build_poset({"0", "x", "y", "z", "1"},
                        {{"0", "x"}, {"x", "y"}, {"x", "z"}, {"y", "1"}, {"z", "1"}});
  Lattice l = derive_lattice(p);
  AlgebraInput in;
  in.unary["exists"] = {0, 3, 4, 3, 4};
  in.unary["forall"] = {0, 0, 0, 3, 3};  // deliberately wrong at the top
  Algebra broken = make_algebra(l, in, "broken");
  QuantifierRange qr = quantifier_range(broken);
  REQUIRE_FALSE(qr.report.pass);
  CHECK(qr.report.witness->clause == "range-equal");
  bool has_max_failure = false;
  for (const Witness& w : qr.report.all_witnesses)
    if (w.clause == "range-max") has_max_failure = true;
  CHECK(has_max_failure);
}

TEST_CASE("si classification across shapes") {
  Lattice two = fixtures::make_chain(2);
  AlgebraInput in2;
  in2.binary["himp"] = derive_himp(two);
  in2.unary["exists"] = {0, 1};
  in2.unary["forall"] = {0, 1};
  CHECK(check_si_status(make_algebra(two, in2, "two")) == SiStatus::Si);

  Lattice one = fixtures::make_chain(1);
  AlgebraInput in1;
  in1.binary["himp"] = derive_himp(one);
  in1.unary["exists"] = {0};
  in1.unary["forall"] = {0};
  CHECK(check_si_status(make_algebra(one, in1, "one")) == SiStatus::FsiNotSi);

  CHECK_THROWS_AS(check_si_status(fixtures::make_kite()), SuiteFailure);
  try {
    check_si_status(fixtures::make_kite());
  } catch (const SuiteFailure& e) {
    CHECK(e.suite_id == "monadic-godel");
    CHECK(e.report.witness->clause == "quantifier-shift");
  }
}

TEST_CASE("require_suite forwards the failing report") {
  Algebra k = fixtures::make_kite();
  CHECK(require_suite(k, "godel").pass);
  CHECK_THROWS_WITH_AS(require_suite(k, "monadic-godel"),
                       doctest::Contains("quantifier-shift"), SuiteFailure);
}

TEST_CASE("lemma batteries hold on the identity-quantifier chain") {
  Algebra mg = fixtures::make_three_chain_godel(/*with_quantifiers=*/true);
  CHECK(check_suite(mg, "monadic-godel").pass);
  CHECK(check_suite(mg, "lemma23-basic").pass);
  CHECK(check_suite(mg, "lemma24").pass);
  CHECK(check_si_status(mg) == SiStatus::Si);
}
