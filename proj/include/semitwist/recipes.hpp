#pragma once

#include <string>
#include <vector>

#include "semitwist/group.hpp"
#include "semitwist/ring.hpp"

namespace semitwist {

// Ring construction recipes. Each recipe compiles to explicit operation
// tables once, with a canonical element order:
//   zmod      residues ascending
//   gf        coefficient tuples, id = c0 + c1*p + ... (constant term least
//             significant); modulus must be monic and irreducible over Z/p
//   product   tuples lexicographic, first operand most significant
//   matrix    row-major entry tuples, first entry most significant
//   endo      value tables lexicographic
RingPtr ring_zmod(long long n, const Caps& caps = {});
RingPtr ring_gf(long long p, const std::vector<long long>& modulus, const Caps& caps = {});
RingPtr ring_product(const std::vector<RingPtr>& operands, const Caps& caps = {});
RingPtr ring_matrix(int n, long long p, const Caps& caps = {});

/// The ring of additive self-maps of a finite abelian group, with pointwise
/// addition and composition multiplication ((f*g)(x) = f(g(x))).
struct EndomorphismRing {
  FiniteAbelianGroup m;
  RingPtr ring;
  std::vector<std::vector<Elem>> tables;  // endo id -> value table on m

  int index_of(const std::vector<Elem>& table) const;
  Elem apply(Elem endo, Elem x) const { return tables[endo][x]; }
};

EndomorphismRing endomorphism_ring(const FiniteAbelianGroup& m, const Caps& caps = {});

// Group recipes. Identity is element 0 for all recipes.
GroupPtr group_cyclic(long long n, const Caps& caps = {});
GroupPtr group_product(const std::vector<GroupPtr>& operands, const Caps& caps = {});
GroupPtr group_symmetric(int n, const Caps& caps = {});

}  // namespace semitwist
