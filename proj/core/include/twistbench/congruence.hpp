#pragma once

#include <string>
#include <vector>

#include "twistbench/algebra.hpp"
#include "twistbench/report.hpp"
#include "twistbench/twist.hpp"

namespace twistbench {

// Partition of a carrier, canonically labeled: element 0 sits in block 0 and
// each block id first appears before any larger one. Canonical labeling makes
// equality a plain vector comparison.
struct Congruence {
  std::vector<int> block;  // element index -> block id

  int size() const { return static_cast<int>(block.size()); }
  int block_count() const;
  bool same(int a, int b) const { return block[a] == block[b]; }
  std::string to_string() const;  // e.g. "[0,1,1]"

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

Congruence identity_congruence(int n);  // all blocks singletons
Congruence total_congruence(int n);     // one block

// Relabels an arbitrary block vector into canonical form.
Congruence canonicalize(std::vector<int> raw);

// Compatibility with every operation table: related inputs must give related
// outputs. Witness clauses read "con:<op>" and bind x, x' (and y, y'); the
// sides are the two unrelated outputs.
CheckReport verify_congruence(const Algebra& a, const Congruence& c);

// Smallest congruence relating x and y: collapse the pair, then merge
// operation images of related tuples until nothing changes.
Congruence principal_congruence(const Algebra& a, int x, int y);

bool refines(const Congruence& fine, const Congruence& coarse);
Congruence meet_congruence(const Congruence& a, const Congruence& b);
// Transitive closure of the union; for two congruences of the same algebra
// this is their join.
Congruence join_congruence(const Congruence& a, const Congruence& b);

// All congruences in block-vector lexicographic order, with their refinement
// order as a lattice (bottom: identity partition, top: single block).
struct ConLattice {
  std::vector<Congruence> congruences;
  Lattice lat;

  int index_of(const Congruence& c) const;  // -1 if absent
};

// Principal congruences plus join closure. For carriers of at most six
// elements (or always, under force_oracle) the result is cross-checked
// against the brute-force partition filter; disagreement throws.
ConLattice enumerate_congruences(const Algebra& a, bool force_oracle = false);

// Every partition of the carrier, filtered by compatibility. Capped at ten
// elements.
std::vector<Congruence> brute_force_congruences(const Algebra& a);

// Pairs are related exactly when both components are; verified to be a
// congruence of the twist.
Congruence gamma_theta(const Congruence& theta, const TwistAlgebra& tw);

// Base elements are related exactly when their (a,0) pairs are; verified to
// be a congruence of the base.
Congruence theta_gamma(const Congruence& gamma, const TwistAlgebra& tw);

// Does theta -> gamma_theta give an order isomorphism between the congruence
// lattices of g and of its twist, inverted by theta_gamma? Failure witnesses
// carry clause "con-iso:<step>" and a descriptive note.
CheckReport check_con_iso(const Algebra& g);

// Are the congruence lattices of g and of its quantifier-image subalgebra
// order-isomorphic? The restriction of each congruence to the image is tried
// as the isomorphism first; if that fails, an exhaustive search runs.
CheckReport check_lemma23_con(const Algebra& g);

// Backtracking search with degree-signature pruning; capped at ten elements.
bool order_isomorphic(const Poset& p, const Poset& q);

}  // namespace twistbench
