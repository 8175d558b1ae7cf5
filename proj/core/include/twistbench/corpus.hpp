#pragma once

#include <vector>

#include "twistbench/algebra.hpp"
#include "twistbench/order.hpp"
#include "twistbench/twist.hpp"

namespace twistbench {

// Every lattice with at most max_size elements, one representative per
// isomorphism class (the relabeling with the lexicographically least order
// matrix), ordered by size then by that matrix. Elements are named x0, x1, …
// Capped at five elements.
std::vector<Lattice> all_lattices(int max_size);

std::vector<Lattice> distributive_lattices(int max_size);

// The distributive lattices that satisfy prelinearity, equipped with their
// derived implication and named g<size>_<k>.
std::vector<Algebra> godel_corpus(int max_size);

// Every corpus member paired with every range-driven quantifier structure
// that passes monadic-godel; named <base>_q<j>.
std::vector<Algebra> monadic_godel_corpus(int max_size);

// All operation-preserving maps from s to t in map-vector lexicographic
// order. Bounds (and the center, when both sides have one) are pinned before
// the scan.
std::vector<Homomorphism> all_homomorphisms(const Algebra& s, const Algebra& t);

}  // namespace twistbench
