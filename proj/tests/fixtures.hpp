#pragma once

// Programmatic copies of the small algebras used across the test suite.
// The same structures exist as .alg files under algebras/; test_spec_io
// cross-checks the two sources against each other.

#include <utility>

#include "twistbench/algebra.hpp"
#include "twistbench/order.hpp"

namespace twistbench::fixtures {

// Five-element "kite": 0 < x < y, z < 1 with y, z incomparable. Carries
// interior quantifier tables. Indices: 0=0, 1=x, 2=y, 3=z, 4=1.
inline Algebra make_kite() {
  Poset p = build_poset({"0", "x", "y", "z", "1"},
                        {{"0", "x"}, {"x", "y"}, {"x", "z"}, {"y", "1"}, {"z", "1"}});
  Lattice l = derive_lattice(p);
  AlgebraInput in;
  in.binary["himp"] = derive_himp(l);
  in.unary["exists"] = {0, 3, 4, 3, 4};
  in.unary["forall"] = {0, 0, 0, 3, 4};
  return make_algebra(std::move(l), in, "kite");
}

inline std::vector<std::string> chain_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      names.push_back("0");
    else if (i == n - 1)
      names.push_back("1");
    else if (n == 3)
      names.push_back("m");
    else
      names.push_back("m" + std::to_string(i));
  }
  return names;
}

inline Lattice make_chain(int n) {
  auto names = chain_names(n);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  return derive_lattice(build_poset(names, covers));
}

// Three-element chain 0 < m < 1 with the order implication; optionally with
// identity quantifiers.
inline Algebra make_three_chain_godel(bool with_quantifiers = false) {
  Lattice l = make_chain(3);
  AlgebraInput in;
  in.binary["himp"] = derive_himp(l);
  if (with_quantifiers) {
    in.unary["exists"] = {0, 1, 2};
    in.unary["forall"] = {0, 1, 2};
  }
  return make_algebra(std::move(l), in, "three_chain");
}

// Four-element Boolean lattice 0 < a, b < 1.
inline Algebra make_bool4() {
  Poset p = build_poset({"0", "a", "b", "1"},
                        {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  Lattice l = derive_lattice(p);
  AlgebraInput in;
  in.binary["himp"] = derive_himp(l);
  return make_algebra(std::move(l), in, "bool4");
}

// Diamond M3: 0 < a, b, c < 1. A lattice, but not a distributive one.
inline Lattice make_m3() {
  Poset p = build_poset({"0", "a", "b", "c", "1"},
                        {{"0", "a"}, {"0", "b"}, {"0", "c"},
                         {"a", "1"}, {"b", "1"}, {"c", "1"}});
  return derive_lattice(p);
}

// Three-element chain 0 < c < 1 with the involution, the strong implication
// and c as the center. Identity quantifiers. Indices: 0=0, 1=c, 2=1.
inline Algebra make_three_chain_nelson(bool with_quantifiers = true) {
  Lattice l = derive_lattice(
      build_poset({"0", "c", "1"}, {{"0", "c"}, {"c", "1"}}));
  AlgebraInput in;
  in.unary["neg"] = {2, 1, 0};
  in.binary["nimp"] = {{2, 2, 2}, {2, 2, 2}, {0, 1, 2}};
  in.consts["center"] = 1;
  if (with_quantifiers) in.unary["exists"] = {0, 1, 2};
  return make_algebra(std::move(l), in, "three_chain_nelson");
}

}  // namespace twistbench::fixtures
