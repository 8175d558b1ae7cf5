#include "doctest.h"
#include "fixtures.hpp"
#include "twistbench/algebra.hpp"
#include "twistbench/error.hpp"

using namespace twistbench;

TEST_CASE("op catalog round-trips names") {
  for (Op op : {Op::join, Op::meet, Op::himp, Op::nimp, Op::neg, Op::hneg,
                Op::exists, Op::forall}) {
    auto back = op_from_name(op_name(op));
    REQUIRE(back.has_value());
    CHECK(*back == op);
  }
  CHECK_FALSE(op_from_name("frob").has_value());
  CHECK(op_is_binary(Op::himp));
  CHECK(op_is_binary(Op::nimp));
  CHECK_FALSE(op_is_binary(Op::exists));
  CHECK_FALSE(op_is_binary(Op::hneg));
}

TEST_CASE("make_algebra validates tables") {
  Lattice l = fixtures::make_chain(3);
  const auto with = [&](auto&& patch) {
    AlgebraInput in;
    patch(in);
    return make_algebra(l, in);
  };

  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.unary["frob"] = {0, 1, 2}; }),
                       doctest::Contains("unknown operation"), Error);
  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.unary["himp"] = {0, 1, 2}; }),
                       doctest::Contains("arity mismatch"), Error);
  CHECK_THROWS_WITH_AS(
      with([](AlgebraInput& in) { in.binary["neg"] = {{0}, {1}, {2}}; }),
      doctest::Contains("arity mismatch"), Error);
  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.unary["neg"] = {0, 1}; }),
                       doctest::Contains("size mismatch"), Error);
  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.unary["neg"] = {0, 1, 7}; }),
                       doctest::Contains("out-of-range"), Error);
  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.unary["hneg"] = {0, 1, 2}; }),
                       doctest::Contains("always derived"), Error);
  CHECK_THROWS_WITH_AS(
      with([](AlgebraInput& in) {
        in.binary["join"] = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
      }),
      doctest::Contains("derived from the order"), Error);
  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.consts["spam"] = 0; }),
                       doctest::Contains("unknown constant"), Error);
  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.consts["bot"] = 0; }),
                       doctest::Contains("derived from the order"), Error);
  CHECK_THROWS_WITH_AS(with([](AlgebraInput& in) { in.consts["center"] = 9; }),
                       doctest::Contains("not in the carrier"), Error);

  BinaryTable idrow = {{2, 2, 2}, {2, 2, 2}, {0, 1, 2}};
  CHECK_THROWS_WITH_AS(
      with([&](AlgebraInput& in) {
        in.binary["himp"] = idrow;
        in.binary["nimp"] = idrow;
      }),
      doctest::Contains("pick one implication"), Error);
  CHECK_THROWS_WITH_AS(
      with([&](AlgebraInput& in) {
        in.binary["nimp"] = idrow;
        in.unary["forall"] = {0, 1, 2};
      }),
      doctest::Contains("do not supply"), Error);
}

TEST_CASE("hneg is derived from himp") {
  Algebra k = fixtures::make_kite();
  REQUIRE(k.hneg.has_value());
  // !e = e => 0: only 0 maps to the top.
  CHECK(*k.hneg == UnaryTable{4, 0, 0, 0, 0});
  for (int e = 0; e < k.size(); ++e)
    CHECK((*k.hneg)[e] == (*k.himp)[e][k.bot()]);
}

TEST_CASE("forall is derived from exists through the involution") {
  Lattice l = derive_lattice(
      build_poset({"0", "c", "1"}, {{"0", "c"}, {"c", "1"}}));
  AlgebraInput in;
  in.unary["neg"] = {2, 1, 0};
  in.binary["nimp"] = {{2, 2, 2}, {2, 2, 2}, {0, 1, 2}};
  in.unary["exists"] = {0, 2, 2};
  Algebra a = make_algebra(l, in);
  REQUIRE(a.forall.has_value());
  CHECK(*a.forall == UnaryTable{0, 0, 2});

  Algebra b = fixtures::make_three_chain_nelson();
  REQUIRE(b.forall.has_value());
  CHECK(*b.forall == UnaryTable{0, 1, 2});  // identity from identity
}

TEST_CASE("accessors guard against absent structure") {
  Algebra g = fixtures::make_three_chain_godel();
  CHECK_THROWS_WITH_AS(g.apply1(Op::neg, 0), doctest::Contains("absent"), Error);
  CHECK_THROWS_WITH_AS(g.apply2(Op::nimp, 0, 0), doctest::Contains("absent"),
                       Error);
  CHECK_THROWS_WITH_AS(g.constant(ConstName::center),
                       doctest::Contains("no center"), Error);
  CHECK_THROWS_AS(g.apply1(Op::join, 0), Error);   // wrong arity
  CHECK_THROWS_AS(g.apply2(Op::neg, 0, 0), Error);

  CHECK(g.constant(ConstName::bot) == 0);
  CHECK(g.constant(ConstName::top) == 2);

  Algebra n = fixtures::make_three_chain_nelson();
  CHECK(n.constant(ConstName::center) == 1);
}

TEST_CASE("present_ops lists the signature in catalog order") {
  Algebra k = fixtures::make_kite();
  CHECK(k.present_ops() == std::vector<Op>{Op::join, Op::meet, Op::himp,
                                           Op::hneg, Op::exists, Op::forall});
  Algebra n = fixtures::make_three_chain_nelson();
  CHECK(n.present_ops() == std::vector<Op>{Op::join, Op::meet, Op::nimp,
                                           Op::neg, Op::exists, Op::forall});
}
