#include "semitwist/semilin.hpp"

#include <algorithm>

#include "semitwist/errors.hpp"

namespace semitwist {

int SemiGroup::index_of(Elem unit, int aut_index) const {
  for (size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].unit == unit && pairs[i].aut_index == aut_index) return int(i);
  return -1;
}

std::string SemiGroup::pair_name(int idx) const {
  const SemiPair& p = pairs[idx];
  return "(" + base.total->name(p.unit) + ", " + aut->group->name(p.aut_index) + ")";
}

bool semi_intertwines(const CosliceObject& f, const std::vector<Elem>& phi_table, Elem s,
                      std::span<const Elem> r_subset) {
  const FiniteRing& S = *f.total;
  for (Elem r : r_subset)
    if (S.mul(s, f.structure.map[r]) != S.mul(f.structure.map[phi_table[r]], s)) return false;
  return true;
}

SemiGroup semilinearize(const CosliceObject& f, AutPtr aut, const Caps& caps) {
  if (f.base != aut->ring)
    throw validation_error(Violation::BadRecipe, "", "coslice base and Aut ring differ");
  const FiniteRing& S = *f.total;

  SemiGroup sg;
  sg.base = f;
  sg.aut = aut;
  sg.s_units = enumerate_units(S);

  // the intertwining condition propagates through sums and products in r,
  // so a generating set of R decides membership
  GenPlan rplan = make_gen_plan(ring_view(*f.base));
  std::span<const Elem> gens(rplan.generators);

  int n_aut = int(aut->autos.size());
  for (Elem u : sg.s_units.units)
    for (int k = 0; k < n_aut; ++k)
      if (semi_intertwines(f, aut->autos[k].map, u, gens)) sg.pairs.push_back({u, k});

  int n = int(sg.pairs.size());
  std::vector<Elem> op(size_t(n) * n, -1);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = sg.pair_name(i);
    for (int j = 0; j < n; ++j) {
      Elem su = S.mul(sg.pairs[i].unit, sg.pairs[j].unit);
      int ak = aut->group->op(sg.pairs[i].aut_index, sg.pairs[j].aut_index);
      int idx = sg.index_of(su, ak);
      if (idx < 0) throw std::logic_error("semi pairs not closed under diagonal multiplication");
      op[size_t(i) * n + j] = idx;
    }
  }
  int id_idx = sg.index_of(S.one, 0);
  if (id_idx < 0) throw std::logic_error("identity pair (1_S, id) missing from semi group");
  (void)caps;
  // group axioms verified exhaustively
  sg.group = check_group_tables("semi_" + f.base->label + "(" + S.label + ")", n, id_idx,
                                std::move(op), std::move(names));

  std::vector<Elem> to_aut_table(n);
  sg.to_units.resize(n);
  for (int i = 0; i < n; ++i) {
    to_aut_table[i] = sg.pairs[i].aut_index;
    sg.to_units[i] = sg.pairs[i].unit;
  }
  sg.to_aut = make_group_hom(sg.group, aut->group, std::move(to_aut_table));
  // the unit projection respects multiplication
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sg.to_units[sg.group->op(i, j)] != S.mul(sg.to_units[i], sg.to_units[j]))
        throw std::logic_error("unit projection is not multiplicative");
  return sg;
}

GroupHom semilinearize_morphism(const CosliceRingMorphism& h, const SemiGroup& src,
                                const SemiGroup& dst) {
  if (src.base.total != h.source.total || dst.base.total != h.target.total)
    throw validation_error(Violation::BadRecipe, "", "semi groups do not match the morphism");
  int n = int(src.pairs.size());
  std::vector<Elem> map(n);
  for (int i = 0; i < n; ++i) {
    int idx = dst.index_of(h.h.map[src.pairs[i].unit], src.pairs[i].aut_index);
    if (idx < 0)
      throw std::logic_error("target membership failure: (h(s), phi) not in semi_R(T)");
    map[i] = idx;
  }
  GroupHom out = make_group_hom(src.group, dst.group, std::move(map));
  // commutes with the forgetful maps to Aut(R)
  for (int i = 0; i < n; ++i)
    if (dst.to_aut.map[out.map[i]] != src.to_aut.map[i])
      throw std::logic_error("semilinearized morphism broke the projection to Aut(R)");
  return out;
}

ModuleStructure regular_module_structure(RingPtr r, const std::vector<long long>& factors,
                                         const Caps& caps) {
  FiniteAbelianGroup m = make_abelian_group(factors, caps);
  if (m.size != r->n)
    throw validation_error(Violation::BadRecipe, "",
                           "regular module needs |M| == |R| (got " + std::to_string(m.size) +
                               " vs " + std::to_string(r->n) + ")");
  for (Elem a = 0; a < r->n; ++a)
    for (Elem b = 0; b < r->n; ++b)
      if (m.add(a, b) != r->add(a, b))
        throw validation_error(Violation::BadRecipe,
                               "(a=" + r->name(a) + ", b=" + r->name(b) + ")",
                               "module addition differs from the ring's under the identity "
                               "correspondence; chi regular does not apply");
  EndomorphismRing endos = endomorphism_ring(m, caps);
  std::vector<Elem> chi(r->n);
  for (Elem x = 0; x < r->n; ++x) {
    std::vector<Elem> table(r->n);
    for (Elem y = 0; y < r->n; ++y) table[y] = r->mul(x, y);
    int idx = endos.index_of(table);
    if (idx < 0) throw std::logic_error("left multiplication is not additive");
    chi[x] = idx;
  }
  RingHom chi_hom = make_ring_hom(r, endos.ring, std::move(chi));
  return ModuleStructure{std::move(m), std::move(endos), std::move(chi_hom)};
}

ModuleStructure module_structure_from_chi(RingPtr r, const FiniteAbelianGroup& m,
                                          std::vector<Elem> chi_ids, const Caps& caps) {
  EndomorphismRing endos = endomorphism_ring(m, caps);
  if ((int)chi_ids.size() != r->n)
    throw validation_error(Violation::BadRecipe, "", "chi needs one endomorphism id per ring element");
  for (Elem e : chi_ids)
    if (e < 0 || e >= endos.ring->n)
      throw validation_error(Violation::BadRecipe, "(id=" + std::to_string(e) + ")",
                             "endomorphism id out of range");
  RingHom chi_hom = make_ring_hom(r, endos.ring, std::move(chi_ids));
  return ModuleStructure{m, std::move(endos), std::move(chi_hom)};
}

LiftCheck semilinear_action_check(const GroupAction& action, const SemiGroup& semi,
                                  const GroupHom& candidate) {
  if (candidate.src != action.group || candidate.dst != semi.group)
    throw validation_error(Violation::BadRecipe, "", "candidate has wrong endpoints");
  for (Elem g = 0; g < action.group->n; ++g)
    if (semi.to_aut.map[candidate.map[g]] != action.theta.map[g]) return LiftCheck{false, g};
  return LiftCheck{true, -1};
}

}  // namespace semitwist
