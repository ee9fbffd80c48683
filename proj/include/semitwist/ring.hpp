#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semitwist/caps.hpp"

namespace semitwist {

/// Element id inside a fixed finite structure. Ids index the canonical
/// element order of the construction recipe and are stable across runs.
using Elem = int;

/// A finite unital ring stored as dense operation tables over element ids
/// 0..n-1. Every instance is validated exhaustively on construction (see
/// check_ring_tables) and immutable afterwards. The zero ring (n = 1,
/// zero == one) is allowed.
struct FiniteRing {
  std::string label;
  int n = 0;
  Elem zero = 0;
  Elem one = 0;
  std::vector<Elem> add_table;  // n*n, row-major
  std::vector<Elem> mul_table;  // n*n, row-major
  std::vector<Elem> neg_table;  // additive inverses, derived during validation
  std::vector<std::string> names;

  Elem add(Elem a, Elem b) const { return add_table[size_t(a) * n + b]; }
  Elem mul(Elem a, Elem b) const { return mul_table[size_t(a) * n + b]; }
  Elem neg(Elem a) const { return neg_table[a]; }
  const std::string& name(Elem a) const { return names[a]; }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Validates all ring axioms exhaustively (abelian addition, associativity,
/// two-sided distributivity, identities) and returns the finished ring.
/// Throws validation_error naming the first violating triple in canonical
/// scan order. Empty `names` defaults to decimal ids.
RingPtr check_ring_tables(std::string label, int n, Elem zero, Elem one, std::vector<Elem> add,
                          std::vector<Elem> mul, std::vector<std::string> names = {});

/// Units of a ring with their inverse map: inv_of[e] is the two-sided inverse
/// of e, or -1 when e is not a unit. Units are listed in ascending-id
/// (canonical) order.
struct UnitGroup {
  std::vector<Elem> units;
  std::vector<Elem> inv_of;
};

UnitGroup enumerate_units(const FiniteRing& r);

}  // namespace semitwist
