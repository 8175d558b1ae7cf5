#include "twistbench/algebra.hpp"

#include <array>

#include "twistbench/error.hpp"

namespace twistbench {

namespace {

constexpr std::array<Op, 8> kCatalog = {Op::join, Op::meet,   Op::himp,
                                        Op::nimp, Op::neg,    Op::hneg,
                                        Op::exists, Op::forall};

}  // namespace

bool op_is_binary(Op op) {
  switch (op) {
    case Op::join:
    case Op::meet:
    case Op::himp:
    case Op::nimp:
      return true;
    default:
      return false;
  }
}

std::string_view op_name(Op op) {
  switch (op) {
    case Op::join: return "join";
    case Op::meet: return "meet";
    case Op::himp: return "himp";
    case Op::nimp: return "nimp";
    case Op::neg: return "neg";
    case Op::hneg: return "hneg";
    case Op::exists: return "exists";
    case Op::forall: return "forall";
  }
  return "?";
}

std::optional<Op> op_from_name(std::string_view name) {
  for (Op op : kCatalog)
    if (op_name(op) == name) return op;
  return std::nullopt;
}

std::string_view const_name(ConstName c) {
  switch (c) {
    case ConstName::bot: return "bot";
    case ConstName::top: return "top";
    case ConstName::center: return "center";
  }
  return "?";
}

std::optional<ConstName> const_from_name(std::string_view name) {
  if (name == "bot") return ConstName::bot;
  if (name == "top") return ConstName::top;
  if (name == "center") return ConstName::center;
  return std::nullopt;
}

bool Algebra::has_op(Op op) const {
  switch (op) {
    case Op::join:
    case Op::meet:
      return true;
    case Op::himp: return himp.has_value();
    case Op::nimp: return nimp.has_value();
    case Op::neg: return neg.has_value();
    case Op::hneg: return hneg.has_value();
    case Op::exists: return exists.has_value();
    case Op::forall: return forall.has_value();
  }
  return false;
}

bool Algebra::has_const(ConstName c) const {
  return c == ConstName::center ? center.has_value() : true;
}

int Algebra::constant(ConstName c) const {
  switch (c) {
    case ConstName::bot: return bot();
    case ConstName::top: return top();
    case ConstName::center:
      if (!center) throw Error("algebra '" + name + "' has no center");
      return *center;
  }
  throw Error("bad constant");
}

int Algebra::apply1(Op op, int a) const {
  const std::optional<UnaryTable>* t = nullptr;
  switch (op) {
    case Op::neg: t = &neg; break;
    case Op::hneg: t = &hneg; break;
    case Op::exists: t = &exists; break;
    case Op::forall: t = &forall; break;
    default:
      throw Error(std::string("operation ") + std::string(op_name(op)) +
                  " is not unary");
  }
  if (!t->has_value())
    throw Error("operation " + std::string(op_name(op)) +
                " absent from algebra '" + name + "'");
  return (**t)[a];
}

int Algebra::apply2(Op op, int a, int b) const {
  switch (op) {
    case Op::join: return lat.join[a][b];
    case Op::meet: return lat.meet[a][b];
    case Op::himp:
      if (!himp)
        throw Error("operation himp absent from algebra '" + name + "'");
      return (*himp)[a][b];
    case Op::nimp:
      if (!nimp)
        throw Error("operation nimp absent from algebra '" + name + "'");
      return (*nimp)[a][b];
    default:
      throw Error(std::string("operation ") + std::string(op_name(op)) +
                  " is not binary");
  }
}

std::vector<Op> Algebra::present_ops() const {
  std::vector<Op> out;
  for (Op op : kCatalog)
    if (has_op(op)) out.push_back(op);
  return out;
}

namespace {

void check_unary(const UnaryTable& t, int n, const std::string& op) {
  if (static_cast<int>(t.size()) != n)
    throw Error("size mismatch for op " + op + ": expected " +
                std::to_string(n) + " entries, got " +
                std::to_string(t.size()));
  for (int v : t)
    if (v < 0 || v >= n)
      throw Error("out-of-range entry in op " + op);
}

void check_binary(const BinaryTable& t, int n, const std::string& op) {
  if (static_cast<int>(t.size()) != n)
    throw Error("size mismatch for op " + op + ": expected " +
                std::to_string(n) + " rows, got " + std::to_string(t.size()));
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw Error("size mismatch for op " + op + ": ragged row");
    for (int v : row)
      if (v < 0 || v >= n)
        throw Error("out-of-range entry in op " + op);
  }
}

}  // namespace

Algebra make_algebra(Lattice lat, const AlgebraInput& input, std::string name) {
  Algebra a;
  a.name = std::move(name);
  a.lat = std::move(lat);
  const int n = a.size();

  for (const auto& [op, table] : input.unary) {
    auto id = op_from_name(op);
    if (!id) throw Error("unknown operation '" + op + "'");
    if (op_is_binary(*id))
      throw Error("arity mismatch: op " + op + " is binary, unary table given");
    check_unary(table, n, op);
    switch (*id) {
      case Op::neg: a.neg = table; break;
      case Op::exists: a.exists = table; break;
      case Op::forall: a.forall = table; break;
      case Op::hneg:
        throw Error("op hneg is always derived; do not supply it");
      default:
        throw Error("op " + op + " cannot be supplied as a table");
    }
  }
  for (const auto& [op, table] : input.binary) {
    auto id = op_from_name(op);
    if (!id) throw Error("unknown operation '" + op + "'");
    if (!op_is_binary(*id))
      throw Error("arity mismatch: op " + op + " is unary, binary table given");
    check_binary(table, n, op);
    switch (*id) {
      case Op::himp: a.himp = table; break;
      case Op::nimp: a.nimp = table; break;
      default:
        throw Error("op " + op + " is derived from the order; do not supply it");
    }
  }
  for (const auto& [cname, elem] : input.consts) {
    auto id = const_from_name(cname);
    if (!id) throw Error("unknown constant '" + cname + "'");
    if (*id != ConstName::center)
      throw Error("constant " + cname + " is derived from the order");
    if (elem < 0 || elem >= n)
      throw Error("constant " + cname + " is not in the carrier");
    a.center = elem;
  }

  if (a.himp && a.nimp)
    throw Error("algebra '" + a.name +
                "' declares both himp and nimp; pick one implication");
  if (a.nimp && a.forall)
    throw Error(
        "forall is derived from exists and neg when nimp is present; "
        "do not supply it");

  // Derived operations.
  if (a.himp) {
    UnaryTable h(n);
    for (int x = 0; x < n; ++x) h[x] = (*a.himp)[x][a.bot()];
    a.hneg = std::move(h);
  }
  if (a.nimp && a.neg && a.exists) {
    UnaryTable f(n);
    for (int x = 0; x < n; ++x) f[x] = (*a.neg)[(*a.exists)[(*a.neg)[x]]];
    a.forall = std::move(f);
  }
  return a;
}

}  // namespace twistbench
