#pragma once

#include <optional>
#include <string>

#include "semitwist/action.hpp"

namespace semitwist {

/// The twisted group ring of a group action. Elements are coefficient tables
/// G -> R, encoded mixed-radix with the coefficient of group element 0 as the
/// most significant digit, so element ids sort lexicographically in the
/// coefficient tables. Id 0 is the zero element.
///
/// When |R|^|G| fits under caps.materialize the ring is realized with full
/// operation tables and re-validated through check_ring_tables (associativity
/// of the twisted product holds exactly because theta is an action; the tables
/// re-confirm it). Larger instances stay virtual: multiplication is computed
/// on demand from the defining formula and axiom checks are sampled (see
/// verify_twisted_axioms).
struct TwistedGroupRing {
  GroupAction action;
  long long size = 0;
  RingPtr ring;                        // materialized realization, or null
  RingHom structure;                   // valid iff materialized
  std::vector<Elem> structure_table;   // r -> element id of r*e_G, always
  std::vector<long long> radix_pow;    // radix_pow[g] = |R|^(|G|-1-g)

  bool materialized() const { return ring != nullptr; }

  Elem coeff(long long id, Elem g) const {
    return Elem((id / radix_pow[g]) % action.ring->n);
  }
  long long monomial(Elem r, Elem g) const { return r * radix_pow[g]; }
  long long zero_id() const { return 0; }
  long long one_id() const { return monomial(action.ring->one, action.group->id); }

  long long add_ids(long long a, long long b) const;
  long long mul_ids(long long a, long long b) const;
  std::string elem_name(long long id) const;
};

TwistedGroupRing twistify(const GroupAction& action, const Caps& caps = {});

/// Re-checks the ring axioms of a twisted group ring. Materialized rings are
/// checked exhaustively over all triples; virtual ones get every monomial
/// associativity triple plus 10^4 fixed-seed random general triples.
struct TwistAxiomReport {
  bool exhaustive = false;
  long long checked_triples = 0;
  bool pass = true;
  std::string witness;
};

TwistAxiomReport verify_twisted_axioms(const TwistedGroupRing& tw);

/// The coslice object R -> R_theta[G]. Requires materialization.
CosliceObject twisted_coslice(const TwistedGroupRing& tw);

/// Functorial action on morphisms: the ring hom sending r*g to r*f(g),
/// validated as a hom under R between the two twisted group rings.
CosliceRingMorphism twistify_morphism(const SliceGroupMorphism& j, const TwistedGroupRing& tw_src,
                                      const TwistedGroupRing& tw_dst);
CosliceRingMorphism twistify_morphism(const SliceGroupMorphism& j, const Caps& caps = {});

}  // namespace semitwist
