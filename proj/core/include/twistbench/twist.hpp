#pragma once

#include <utility>
#include <vector>

#include "twistbench/algebra.hpp"
#include "twistbench/report.hpp"

namespace twistbench {

// Map between two finite algebras, given element-wise. Nothing about it is
// trusted: verify_homomorphism recomputes preservation and is_bijective
// recomputes bijectivity on every call.
struct Homomorphism {
  Algebra source;
  Algebra target;
  std::vector<int> map;  // source index -> target index
};

Homomorphism identity_hom(const Algebra& a);

// Preservation of every operation and constant present on both sides.
// Witness clauses read "hom:<op>"; assignments bind x (and y).
CheckReport verify_homomorphism(const Homomorphism& h);

bool is_bijective(const Homomorphism& h);

// g after f; throws Error when f's target and g's source differ.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

// Pair algebra over a Heyting-family base: carrier {(a,b) : a /\ b = 0} in
// lexicographic (a,b) order, with the componentwise-dual operations, the
// implication (a,b)->(d,e) = (a=>d, a/\e), the swap involution, center (0,0)
// and, when the base is monadic, E(a,b) = (Ea, Ab). Construction cross-checks
// the order-derived tables against the componentwise formulas and the derived
// A table against (Aa, Eb).
struct TwistAlgebra {
  Algebra base;
  std::vector<std::pair<int, int>> pairs;  // base-index pairs, lex order
  Algebra result;

  int index_of(int a, int b) const;  // -1 if absent
};

TwistAlgebra build_twist(const Algebra& g);

// Subalgebra {x : x >= c} of a centered Nelson-family algebra, presented as a
// Heyting-family algebra: himp is the restricted ->, bottom is c, quantifiers
// restrict when present. Restriction is audited against the order-derived
// relative pseudocomplement.
struct CenterAlgebra {
  std::vector<int> carrier;  // center index -> source index, ascending
  Algebra result;

  int index_of(int source_elem) const;  // -1 if absent
};

CenterAlgebra center_algebra(const Algebra& t);

// Verification depth for the natural maps: Full checks every operation on
// every tuple, Spot only bijectivity, constants and the unary tables.
enum class VerifyLevel { Full, Spot };

// x |-> (x, 0) into the center of the twist; verified iso.
Homomorphism alpha(const Algebra& g, VerifyLevel level = VerifyLevel::Full);

// x |-> (x \/ c, ~x \/ c) into the twist of the center; verified iso.
Homomorphism beta(const Algebra& t, VerifyLevel level = VerifyLevel::Full);

// For all x, y >= c with x /\ y = c there is z with z \/ c = x, ~z \/ c = y.
CheckReport check_ck(const Algebra& t);

// Pair map K(f)(a,b) = (f a, f b) between twists; input and output verified.
Homomorphism lift_hom(const Homomorphism& f);

// Restriction of f to the centers; input and output verified.
Homomorphism drop_hom(const Homomorphism& f);

}  // namespace twistbench
