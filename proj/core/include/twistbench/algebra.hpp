#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistbench/order.hpp"

namespace twistbench {

// Fixed signature catalog. An algebra carries only the subset its kind needs;
// join, meet, bot and top are always present (they come from the lattice).
enum class Op {
  join,
  meet,
  himp,    // Heyting =>
  nimp,    // Nelson ->
  neg,     // De Morgan ~
  hneg,    // Heyting !, derived as himp(x, bot)
  exists,  // E
  forall,  // A
};

bool op_is_binary(Op op);
std::string_view op_name(Op op);
std::optional<Op> op_from_name(std::string_view name);

enum class ConstName { bot, top, center };
std::string_view const_name(ConstName c);
std::optional<ConstName> const_from_name(std::string_view name);

// Unvalidated operation tables, keyed by signature name.
struct AlgebraInput {
  std::map<std::string, UnaryTable> unary;
  std::map<std::string, BinaryTable> binary;
  std::map<std::string, int> consts;  // only "center" is accepted
};

// Finite algebra over the signature catalog. Immutable after construction.
struct Algebra {
  std::string name;
  Lattice lat;

  std::optional<BinaryTable> himp;
  std::optional<BinaryTable> nimp;
  std::optional<UnaryTable> neg;
  std::optional<UnaryTable> hneg;    // always derived
  std::optional<UnaryTable> exists;
  std::optional<UnaryTable> forall;  // derived when nimp is present
  std::optional<int> center;

  int size() const { return lat.size(); }
  int bot() const { return lat.bot; }
  int top() const { return lat.top; }
  bool le(int a, int b) const { return lat.le(a, b); }
  const std::string& label(int e) const { return lat.label(e); }

  bool has_op(Op op) const;
  bool has_const(ConstName c) const;
  int constant(ConstName c) const;            // throws if absent
  int apply1(Op op, int a) const;             // throws if absent
  int apply2(Op op, int a, int b) const;      // throws if absent
  std::vector<Op> present_ops() const;        // catalog order
};

// Validates tables against the lattice and materializes derived operations:
// hneg := himp(x, bot) whenever himp is present, and
// forall := neg(exists(neg(x))) whenever nimp, neg and exists are present.
// Throws Error on arity or size mismatches, out-of-range entries, constants
// outside the carrier, user-supplied derived tables, or a mixed
// himp/nimp signature.
Algebra make_algebra(Lattice lat, const AlgebraInput& input,
                     std::string name = "");

}  // namespace twistbench
