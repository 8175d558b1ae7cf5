#pragma once

#include <string>
#include <vector>

#include "twistbench/report.hpp"

namespace twistbench {

using UnaryTable = std::vector<int>;
using BinaryTable = std::vector<std::vector<int>>;
using BoolMatrix = std::vector<std::vector<bool>>;

// Finite partially ordered set. Elements are dense indices in declaration
// order; labels appear only at the I/O boundary.
struct Poset {
  std::vector<std::string> names;
  BoolMatrix leq;  // leq[a][b] iff a <= b

  int size() const { return static_cast<int>(names.size()); }
  bool le(int a, int b) const { return leq[a][b]; }
  const std::string& label(int e) const { return names[e]; }
  int index_of(const std::string& name) const;  // -1 if absent
};

// Bounded lattice: a poset together with total meet/join tables and the
// global bounds, all derived from the order.
struct Lattice {
  Poset poset;
  BinaryTable meet;
  BinaryTable join;
  int bot = -1;
  int top = -1;

  int size() const { return poset.size(); }
  bool le(int a, int b) const { return poset.le(a, b); }
  const std::string& label(int e) const { return poset.label(e); }
};

// Builds a poset from Hasse covers; leq is the reflexive-transitive closure.
// Redundant covers are accepted silently. Throws Error on duplicate labels,
// unknown labels, or cycles (antisymmetry violations).
Poset build_poset(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& covers);

// Derives meet/join tables and bot/top. Throws Error when some pair lacks a
// unique glb or lub (the message carries the pair and the minimal upper or
// maximal lower bounds found) or when no global bound exists.
Lattice derive_lattice(const Poset& p);

// Exhaustive triple check of a /\ (b \/ c) = (a /\ b) \/ (a /\ c).
// On fail the witness binds a, b, c.
CheckReport check_distributive(const Lattice& l);

// Largest c with a /\ c <= b. Throws Error when the maximum does not exist
// for the given pair (the lattice is not a Heyting algebra).
int relative_pseudocomplement(const Lattice& l, int a, int b);

// Attempts to build the full Heyting implication table; empty optional-like
// behaviour is signalled by throwing on the first offending pair.
BinaryTable derive_himp(const Lattice& l);

}  // namespace twistbench
