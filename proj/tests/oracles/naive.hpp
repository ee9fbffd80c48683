#pragma once

// Independent naive implementations used to cross-check the optimized paths.
// Nothing here shares search machinery with the main library: the group ring
// is a direct convolution product, automorphisms come from filtering every
// bijection, and hom sets come from exhausting value tables.

#include <vector>

#include "semitwist/adjunction.hpp"

namespace semitwist::oracle {

/// The ordinary group ring R[G] by convolution, using the same mixed-radix
/// element codec as twistify so tables are comparable entry by entry.
RingPtr group_ring_naive(const RingPtr& r, const GroupPtr& g);

/// Every ring automorphism, found by filtering all n! bijections. Feasible
/// for n <= 8.
std::vector<std::vector<Elem>> automorphisms_bruteforce(const FiniteRing& r);

/// Every ring hom src -> dst by iterating all |dst|^|src| value tables.
std::vector<std::vector<Elem>> ring_homs_bruteforce(const FiniteRing& src, const FiniteRing& dst);

/// Every group hom src -> dst by iterating all |dst|^|src| value tables.
std::vector<std::vector<Elem>> group_homs_bruteforce(const FiniteGroup& src,
                                                     const FiniteGroup& dst);

/// Every hom under R out of the twisted group ring, by depth-first search
/// over full value tables in canonical element order. Images at r*e_G are
/// pinned by the structure maps; each further assignment is checked against
/// every add/mul constraint whose operands and result are already assigned.
/// Exhaustive and independent of the 1_R*g reduction.
std::vector<std::vector<Elem>> homs_under_tables_naive(const TwistedGroupRing& tw,
                                                       const CosliceObject& target);

/// The intertwining membership predicate checked over all of R.
bool semi_member_full(const CosliceObject& f, const std::vector<Elem>& phi_table, Elem s);

/// Every group hom G -> semi.group lying over theta, by iterating all
/// |semi|^|G| assignments.
std::vector<std::vector<Elem>> homs_over_bruteforce(const GroupAction& action,
                                                    const SemiGroup& semi);

}  // namespace semitwist::oracle
