#pragma once

#include <memory>
#include <vector>

#include "semitwist/hom.hpp"

namespace semitwist {

/// The full ring-automorphism group of a finite ring. `autos` lists every
/// bijective self-hom exactly once, identity first, in canonical (value-table
/// lexicographic) order; `group` realizes composition over those indices,
/// with op(i, j) = index of autos[i] after autos[j].
struct AutGroup {
  RingPtr ring;
  std::vector<RingHom> autos;
  GroupPtr group;

  int index_of_table(const std::vector<Elem>& table) const;
  Elem apply(int aut_index, Elem r) const { return autos[aut_index].map[r]; }
};

using AutPtr = std::shared_ptr<const AutGroup>;

AutPtr enumerate_automorphisms(RingPtr r, const Caps& caps = {});

}  // namespace semitwist
