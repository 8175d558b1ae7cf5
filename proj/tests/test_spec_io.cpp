#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "twistbench/corpus.hpp"
#include "twistbench/error.hpp"
#include "twistbench/spec_io.hpp"
#include "twistbench/suites.hpp"
#include "twistbench/twist.hpp"

using namespace twistbench;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TWISTBENCH_DATA_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "cannot open " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Table-level equality: same labels, order, operations and constants.
bool same_algebra(const Algebra& a, const Algebra& b) {
  return a.lat.poset.names == b.lat.poset.names &&
         a.lat.poset.leq == b.lat.poset.leq && a.himp == b.himp &&
         a.nimp == b.nimp && a.neg == b.neg && a.hneg == b.hneg &&
         a.exists == b.exists && a.forall == b.forall && a.center == b.center;
}

void check_parse_error(const std::string& text, const std::string& needle,
                       int line = 0, int col = 0) {
  try {
    parse_spec(text);
    FAIL_CHECK("expected ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                  e.what());
    if (line) CHECK(e.line == line);
    if (col) CHECK(e.col == col);
  }
}

}  // namespace

TEST_CASE("two-element spec parses into its parts") {
  AlgebraSpec s =
      parse_spec("algebra two { elements: 0 1  covers: 0<1  kind: godel }");
  CHECK(s.name == "two");
  CHECK(s.elements == std::vector<std::string>{"0", "1"});
  CHECK(s.covers ==
        std::vector<std::pair<std::string, std::string>>{{"0", "1"}});
  CHECK(s.ops.empty());
  CHECK(s.constants.empty());
  CHECK(s.kind == "godel");

  Elaboration e = elaborate(s);
  CHECK(e.suite == "godel");
  CHECK(e.report.pass);
  REQUIRE(e.algebra.himp.has_value());
  CHECK(*e.algebra.himp == BinaryTable{{1, 1}, {0, 1}});
  CHECK(e.algebra.hneg == UnaryTable{1, 0});
}

TEST_CASE("parse errors carry a message and a location") {
  check_parse_error("algebra t { elements: a  covers: a<a  kind: raw }",
                    "cycle");
  check_parse_error(
      "algebra t {\n  elements: a b\n  covers: b<a, a<q\n  kind: raw\n}",
      "unknown label 'q'", 3, 18);
  check_parse_error("algebra t { elements: a a covers: kind: raw }",
                    "duplicate element label 'a'");
  check_parse_error("algebra t { elements: covers: kind: raw }",
                    "at least one element");
  check_parse_error("algebra t { elements: a covers: op foo: a->a kind: raw }",
                    "unknown operation 'foo'");
  check_parse_error("algebra t { elements: a covers: op join: (a,a)->a "
                    "kind: raw }",
                    "determined by the order");
  check_parse_error("algebra t { elements: a covers: op hneg: a->a kind: raw }",
                    "always derived");
  check_parse_error(
      "algebra t { elements: a covers: op neg: a->a op neg: a->a kind: raw }",
      "duplicate declaration of operation 'neg'");
  check_parse_error(
      "algebra t { elements: a covers: op neg: (a,a)->a kind: raw }",
      "'neg' is unary");
  check_parse_error(
      "algebra t { elements: a covers: op himp: a->a kind: raw }",
      "'himp' is binary");
  check_parse_error(
      "algebra t { elements: a covers: op neg: a->a, a->a kind: raw }",
      "duplicate mapping for 'a'");
  check_parse_error("algebra t { elements: a covers: const mid: a kind: raw }",
                    "unknown constant 'mid'");
  check_parse_error("algebra t { elements: a covers: kind: fancy }",
                    "unknown kind 'fancy'");
  check_parse_error("algebra t { elements: a covers: }", "expected 'kind'");
  check_parse_error("algebra t { elements: a covers: kind: raw } x",
                    "end of input after");
  check_parse_error("algebra \"t { elements: a covers: kind: raw }",
                    "unterminated quoted label");
  check_parse_error("algebra t [ elements: a covers: kind: raw ]",
                    "unexpected character '['");
}

TEST_CASE("elaboration-level diagnostics") {
  // Partial table.
  check_parse_error("", "expected 'algebra'");
  try {
    elaborate(parse_spec(
        "algebra t {\n  elements: 0 1\n  covers: 0<1\n"
        "  op exists: 0->0\n  kind: raw\n}"));
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK_MESSAGE(
        std::string(e.what()).find("'exists' is not total") !=
            std::string::npos,
        e.what());
    CHECK(e.line == 4);
  }
  // Two maximal elements: not a lattice.
  CHECK_THROWS_AS(
      elaborate(parse_spec(
          "algebra t { elements: 0 a b covers: 0<a, 0<b kind: raw }")),
      ParseError);
  // A declared implication clashing with the derived one.
  CHECK_THROWS_WITH_AS(
      elaborate(parse_spec("algebra t { elements: 0 1 covers: 0<1 "
                           "op nimp: (0,0)->1, (0,1)->1, (1,0)->0, (1,1)->1 "
                           "kind: godel }")),
      doctest::Contains("both himp and nimp"), ParseError);
  // Declared bounds must agree with the order.
  CHECK_THROWS_WITH_AS(
      elaborate(parse_spec("algebra t { elements: 0 1 covers: 0<1 "
                           "const bot: 1 kind: raw }")),
      doctest::Contains("constant bot is declared as '1'"), ParseError);
  // Kind whose suite needs an operation the file never declares.
  CHECK_THROWS_WITH_AS(
      elaborate(parse_spec(
          "algebra t { elements: 0 1 covers: 0<1 kind: monadic-godel }")),
      doctest::Contains("exists"), ParseError);
}

TEST_CASE("declared-kind verdicts: throw by default, report when lenient") {
  std::string text = slurp("remark.alg");
  AlgebraSpec s = parse_spec(text);
  s.kind = "monadic-godel";
  CHECK_THROWS_AS(elaborate(s), SuiteFailure);
  Elaboration e = elaborate(s, /*lenient=*/true);
  CHECK_FALSE(e.report.pass);
  CHECK(e.report.witness->clause == "quantifier-shift");
  CHECK(same_algebra(e.algebra, elaborate(parse_spec(text)).algebra));
}

TEST_CASE("shipped algebra files parse, elaborate and round-trip") {
  const std::vector<std::string> files = {
      "remark.alg",        "two_chain.alg",
      "three_chain.alg",   "three_chain_mg.alg",
      "bool4.alg",         "m3.alg",
      "three_chain_nelson.alg", "three_chain_kleene.alg"};
  for (const std::string& f : files) {
    CAPTURE(f);
    AlgebraSpec s = parse_spec(slurp(f));
    CHECK(parse_spec(write_spec(s)) == s);
    Elaboration e1 = elaborate(s);
    Elaboration e2 = elaborate(s);
    CHECK(e1.report.pass);
    CHECK(same_algebra(e1.algebra, e2.algebra));
  }
}

TEST_CASE("the shipped files pin the fixtures") {
  Algebra remark = load_algebra(slurp("remark.alg"));
  CHECK(same_algebra(remark, fixtures::make_kite()));
  CHECK(check_suite(remark, "monadic-heyting").pass);
  CHECK(check_suite(remark, "godel").pass);
  CHECK_FALSE(check_suite(remark, "monadic-godel").pass);

  Algebra nelson = load_algebra(slurp("three_chain_nelson.alg"));
  CHECK(same_algebra(nelson, fixtures::make_three_chain_nelson()));

  Algebra m3 = load_algebra(slurp("m3.alg"));
  CHECK_FALSE(m3.himp.has_value());  // no residuum on M3

  Algebra kleene = load_algebra(slurp("three_chain_kleene.alg"));
  CHECK(kleene.himp.has_value());  // raw kind still derives when possible
  CHECK(check_suite(kleene, "kleene-centered").pass);
}

TEST_CASE("specs regenerated from algebras elaborate back to them") {
  struct Case {
    Algebra a;
    std::string kind;
  };
  std::vector<Case> cases;
  cases.push_back({fixtures::make_kite(), "raw"});
  cases.push_back({fixtures::make_three_chain_nelson(), "monadic-nelson"});
  cases.push_back({fixtures::make_bool4(), "godel"});
  cases.push_back({build_twist(fixtures::make_kite()).result, "raw"});
  for (const Case& c : cases) {
    CAPTURE(c.a.name);
    AlgebraSpec s = spec_from_algebra(c.a, c.kind);
    CHECK(parse_spec(write_spec(s)) == s);
    CHECK(same_algebra(elaborate(s).algebra, c.a));
  }
  // Derivable tables are left implicit for suite-checked kinds.
  AlgebraSpec b4 = spec_from_algebra(fixtures::make_bool4(), "godel");
  CHECK(b4.ops.empty());
  // Twist labels like (0,x) force quoting; make sure that text survives.
  AlgebraSpec tw = spec_from_algebra(build_twist(fixtures::make_kite()).result,
                                     "raw");
  std::string text = write_spec(tw);
  CHECK(text.find("\"(0,x)\"") != std::string::npos);
  CHECK(parse_spec(text) == tw);
  CHECK_THROWS_WITH_AS(spec_from_algebra(fixtures::make_bool4(), "boole"),
                       doctest::Contains("unknown kind"), Error);
}

TEST_CASE("corpus algebras survive the text round-trip") {
  for (const Algebra& g : godel_corpus(4)) {
    CAPTURE(g.name);
    AlgebraSpec s = spec_from_algebra(g, "godel");
    CHECK(parse_spec(write_spec(s)) == s);
    CHECK(same_algebra(elaborate(s).algebra, g));
  }
  for (const Algebra& g : monadic_godel_corpus(4)) {
    CAPTURE(g.name);
    AlgebraSpec s = spec_from_algebra(g, "monadic-godel");
    CHECK(parse_spec(write_spec(s)) == s);
    CHECK(same_algebra(elaborate(s).algebra, g));
  }
}

TEST_CASE("quoted labels may collide with keywords") {
  AlgebraSpec s = parse_spec(
      "algebra q { elements: \"op\" \"kind\" covers: \"op\"<\"kind\" "
      "kind: raw }");
  CHECK(s.elements == std::vector<std::string>{"op", "kind"});
  CHECK(write_spec(s).find("\"op\"") != std::string::npos);
  CHECK(parse_spec(write_spec(s)) == s);
}

TEST_CASE("formula surface syntax: shapes and precedence") {
  Algebra kite = fixtures::make_kite();

  // The quantifier-shift equation, exactly as the suite states it.
  Formula shift = parse_formula("A(E x \\/ y) = E x \\/ A y");
  Formula wrapped = f_forall("x", f_forall("y", shift));
  CheckReport rep = check_formula(kite, wrapped);
  REQUIRE_FALSE(rep.pass);
  Witness expect{"", {{"x", 1}, {"y", 2}}, 4, 3};
  CHECK(*rep.witness == expect);

  // meet binds tighter than join: x /\ (y \/ z) differs on M3,
  // (x /\ y) \/ z never does when the right side is written explicitly.
  Algebra m3 = make_algebra(fixtures::make_m3(), AlgebraInput{}, "m3");
  CHECK(check_formula(
            m3, parse_formula("forall x. forall y. forall z. "
                              "x /\\ y \\/ z = (x /\\ y) \\/ z"))
            .pass);
  CHECK_FALSE(check_formula(
                  m3, parse_formula("forall x. forall y. forall z. "
                                    "x /\\ (y \\/ z) = x /\\ y \\/ z"))
                  .pass);

  // Implication is right-associative.
  Algebra g3 = fixtures::make_three_chain_godel();
  CHECK(check_formula(g3, parse_formula("forall x. forall y. forall z. "
                                        "(x => y => z) = (x => (y => z))"))
            .pass);
  CHECK_FALSE(check_formula(g3, parse_formula("forall x. forall y. forall z. "
                                              "(x => y => z) = ((x => y) => z)"))
                  .pass);

  // Unary operators bind tighter than the lattice connectives.
  Algebra nel = fixtures::make_three_chain_nelson();
  CHECK(check_formula(nel, parse_formula("forall x. forall y. "
                                         "~x \\/ y = (~x) \\/ y"))
            .pass);
  CHECK_FALSE(check_formula(nel, parse_formula("forall x. forall y. "
                                               "~x \\/ y = ~(x \\/ y)"))
                  .pass);
  CHECK(check_formula(kite, parse_formula("forall x. forall y. "
                                          "E x /\\ y = (E x) /\\ y"))
            .pass);
  CHECK_FALSE(check_formula(kite, parse_formula("forall x. forall y. "
                                                "E x /\\ y = E (x /\\ y)"))
                  .pass);
}

TEST_CASE("formula surface syntax: constants, guards and connectives") {
  Algebra kite = fixtures::make_kite();
  Algebra nel = fixtures::make_three_chain_nelson();

  CHECK(check_formula(kite, parse_formula("forall x. x /\\ 1 = x")).pass);
  CHECK(check_formula(kite, parse_formula("forall x. 0 <= x")).pass);
  CHECK(check_formula(nel, parse_formula("c -> 0 = 1")).pass);
  CHECK(check_formula(nel, parse_formula("~c = c")).pass);
  CHECK(check_formula(kite, parse_formula("forall x. !x \\/ x <= 1")).pass);

  // Quantifier guards restrict the range to the exists-fixpoints.
  CHECK(check_formula(kite, parse_formula("forall x [x = E x]. A x = x")).pass);
  CHECK_FALSE(check_formula(kite, parse_formula("forall x. A x = x")).pass);

  // Formula-level connectives.
  CHECK(check_formula(kite, parse_formula(
                                "exists w. w /\\ w = w & not (w = 0)"))
            .pass);
  CHECK(check_formula(kite, parse_formula("forall x. x = 0 | not x = 0"))
            .pass);
  CHECK(check_formula(kite, parse_formula("forall x. x = 1 ==> 1 <= x")).pass);
}

TEST_CASE("formula parse errors") {
  auto bad = [](const std::string& text, const std::string& needle) {
    try {
      parse_formula(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                    e.what());
    }
  };
  bad("forall . x = x", "expected a variable name");
  bad("forall E . x = x", "expected a variable name");
  bad("x =", "expected a term");
  bad("x < y", "expected '=' or '<='");
  bad("(x = y", "expected ')'");
  bad("E = x", "expected a term");
  bad("x @ y", "unexpected character '@'");
  bad("x = forall", "unexpected 'forall' in a term");
  bad("x = y z", "expected end of formula");
}
