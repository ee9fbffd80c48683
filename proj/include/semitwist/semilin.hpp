#pragma once

#include <span>
#include <string>
#include <vector>

#include "semitwist/action.hpp"
#include "semitwist/recipes.hpp"

namespace semitwist {

/// An element (s, phi) of semi_R(S): a unit s of S together with a ring
/// automorphism phi of R satisfying s*f(r) = f(phi(r))*s for every r in R,
/// where f is the structure map.
struct SemiPair {
  Elem unit;
  int aut_index;
};

/// The group of semilinear inner automorphisms under R of a coslice object
/// f: R -> S. Multiplication is diagonal: (s, phi)(s', psi) = (ss', phi psi).
/// Pairs are listed unit-position major (in the canonical unit order of S),
/// automorphism index minor. `group` realizes the multiplication over pair
/// indices; `to_aut` is the forgetful group hom onto Aut(R).
struct SemiGroup {
  CosliceObject base;
  AutPtr aut;
  std::vector<SemiPair> pairs;
  GroupPtr group;
  GroupHom to_aut;
  std::vector<Elem> to_units;  // pair index -> element of S
  UnitGroup s_units;

  int index_of(Elem unit, int aut_index) const;
  std::string pair_name(int idx) const;
};

/// Enumerates semi_R(S) and realizes it as a finite group (all group axioms
/// re-verified exhaustively). Membership is decided on a generating set of R;
/// the intertwining condition propagates through sums and products, so
/// generators suffice (the full-R predicate is kept as a test oracle).
SemiGroup semilinearize(const CosliceObject& f, AutPtr aut, const Caps& caps = {});

/// Functorial action on a morphism h under R: (s, phi) -> (h(s), phi).
/// Membership of the image is re-verified; a miss is an implementation bug
/// and throws std::logic_error.
GroupHom semilinearize_morphism(const CosliceRingMorphism& h, const SemiGroup& src,
                                const SemiGroup& dst);

/// The intertwining predicate checked over an explicit subset of R.
bool semi_intertwines(const CosliceObject& f, const std::vector<Elem>& phi_table, Elem s,
                      std::span<const Elem> r_subset);

/// An R-module presented by its abelian group and the multiplication hom
/// chi: R -> End(M).
struct ModuleStructure {
  FiniteAbelianGroup module;
  EndomorphismRing endos;
  RingHom chi;  // R -> endos.ring
};

/// chi(r) = left multiplication by r, for modules whose canonical element
/// order is additively identical to R's (checked exhaustively).
ModuleStructure regular_module_structure(RingPtr r, const std::vector<long long>& factors,
                                         const Caps& caps = {});

/// chi given explicitly as one canonical endomorphism id per ring element.
ModuleStructure module_structure_from_chi(RingPtr r, const FiniteAbelianGroup& m,
                                          std::vector<Elem> chi_ids, const Caps& caps = {});

/// True iff the candidate lifts theta along the forgetful map, i.e.
/// to_aut . candidate = theta. On failure reports the first bad g.
struct LiftCheck {
  bool ok = false;
  Elem witness_g = -1;
};

LiftCheck semilinear_action_check(const GroupAction& action, const SemiGroup& semi,
                                  const GroupHom& candidate);

}  // namespace semitwist
