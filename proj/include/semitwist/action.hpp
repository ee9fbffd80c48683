#pragma once

#include <utility>
#include <vector>

#include "semitwist/autgroup.hpp"
#include "semitwist/hom.hpp"

namespace semitwist {

/// A group acting on a ring by automorphisms: an object of the slice category
/// of groups over Aut(R). theta maps group elements to automorphism indices
/// of `aut` and is a validated group homomorphism.
struct GroupAction {
  GroupPtr group;
  RingPtr ring;
  AutPtr aut;
  GroupHom theta;

  int aut_index(Elem g) const { return theta.map[g]; }
  Elem apply(Elem g, Elem r) const { return aut->autos[theta.map[g]].map[r]; }
};

/// Completes per-generator automorphism assignments to the unique group hom
/// into Aut(R) and validates it. The assigned elements must generate the
/// group. Throws NotAHomomorphism with the violated relation as witness, or
/// UnknownAutomorphism for an out-of-range index.
GroupAction make_action(GroupPtr group, RingPtr ring, AutPtr aut,
                        const std::vector<std::pair<Elem, int>>& generator_images);

/// Full theta table variant (one automorphism index per group element).
GroupAction make_action_table(GroupPtr group, RingPtr ring, AutPtr aut, std::vector<int> theta);

GroupAction trivial_action(GroupPtr group, RingPtr ring, AutPtr aut);

/// A morphism of group actions over Aut(R): f with theta_g = psi_{f(g)}.
struct SliceGroupMorphism {
  GroupAction source, target;
  GroupHom f;
};

SliceGroupMorphism check_slice_morphism(const GroupAction& source, const GroupAction& target,
                                        GroupHom f);
SliceGroupMorphism identity_slice(const GroupAction& a);
SliceGroupMorphism compose(const SliceGroupMorphism& j2, const SliceGroupMorphism& j1);

/// An object of the coslice category under R: a ring hom structure: R -> total.
struct CosliceObject {
  RingPtr base;
  RingPtr total;
  RingHom structure;
};

CosliceObject identity_coslice_object(RingPtr r);

/// A ring hom under R: h with h . source.structure = target.structure.
struct CosliceRingMorphism {
  CosliceObject source, target;
  RingHom h;
};

CosliceRingMorphism check_coslice_morphism(const CosliceObject& source,
                                           const CosliceObject& target, RingHom h);
CosliceRingMorphism identity_coslice(const CosliceObject& o);
CosliceRingMorphism compose(const CosliceRingMorphism& h2, const CosliceRingMorphism& h1);

}  // namespace semitwist
