#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitwist/caps.hpp"
#include "semitwist/group.hpp"
#include "semitwist/ring.hpp"

namespace semitwist {

/// Total maps between finite structures, stored as value tables. Equality of
/// homs is equality of value tables between identical source/target objects.
struct RingHom {
  RingPtr src, dst;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool operator==(const RingHom& o) const {
    return src == o.src && dst == o.dst && map == o.map;
  }
};

struct GroupHom {
  GroupPtr src, dst;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool operator==(const GroupHom& o) const {
    return src == o.src && dst == o.dst && map == o.map;
  }
};

/// nullopt when the table is a homomorphism; otherwise a short witness.
std::optional<std::string> ring_hom_violation(const FiniteRing& src, const FiniteRing& dst,
                                              const std::vector<Elem>& map);
std::optional<std::string> group_hom_violation(const FiniteGroup& src, const FiniteGroup& dst,
                                               const std::vector<Elem>& map);

RingHom make_ring_hom(RingPtr src, RingPtr dst, std::vector<Elem> map);
GroupHom make_group_hom(GroupPtr src, GroupPtr dst, std::vector<Elem> map);
RingHom identity_ring_hom(RingPtr r);
GroupHom identity_group_hom(GroupPtr g);
RingHom compose(const RingHom& after, const RingHom& before);
GroupHom compose(const GroupHom& after, const GroupHom& before);
bool is_bijective_table(const std::vector<Elem>& map, int n_dst);

// ---------------------------------------------------------------------------
// Generic hom search over finite operation tables.
//
// A StructureView exposes a carrier 0..n-1 together with its binary operation
// tables and a positional list of pinned elements (structure constants that
// every hom must map onto the target's pins: zero/one for rings, the identity
// for groups). The search backtracks over a greedily chosen generating set;
// every other element's image is forced by a recorded derivation, and partial
// maps are rejected as soon as any operation square fails to commute.
// ---------------------------------------------------------------------------

struct StructureView {
  int n = 0;
  std::vector<const std::vector<Elem>*> ops;
  std::vector<Elem> pinned;
};

StructureView ring_view(const FiniteRing& r);
StructureView group_view(const FiniteGroup& g);

struct DerivStep {
  Elem result;
  int op;
  Elem lhs, rhs;
};

/// Greedy generating set with derivation stages. stages[0] derives the
/// closure of the pinned elements; stages[k+1] becomes available once
/// generators[k] has an image.
struct GenPlan {
  std::vector<Elem> generators;
  std::vector<std::vector<DerivStep>> stages;
};

GenPlan make_gen_plan(const StructureView& s);

struct TableSearchOptions {
  bool bijective_only = false;
  uint64_t shuffle_seed = 0;  // 0 = canonical candidate order
  long long node_budget = 1000000;
  std::function<bool(Elem src_elem, Elem image)> image_ok;  // optional pruning predicate
};

/// All op- and pin-preserving maps src -> dst, canonically sorted by value
/// table. Throws cap_exceeded("search_nodes") when the budget runs out.
std::vector<std::vector<Elem>> search_hom_tables(const StructureView& src,
                                                 const StructureView& dst, const GenPlan& plan,
                                                 const TableSearchOptions& opts = {});

/// Constraint set for the spec-facing searches: pins fix images of chosen
/// elements; shuffle_seed randomizes the internal exploration order only (the
/// result list is canonical either way).
struct HomConstraints {
  std::vector<std::pair<Elem, Elem>> pin;
  bool bijective_only = false;
  uint64_t shuffle_seed = 0;
};

std::vector<RingHom> ring_hom_search(RingPtr src, RingPtr dst, const HomConstraints& c = {},
                                     const Caps& caps = {});
std::vector<GroupHom> group_hom_search(GroupPtr src, GroupPtr dst, const HomConstraints& c = {},
                                       const Caps& caps = {});

}  // namespace semitwist
