#include "semitwist/action.hpp"

#include "semitwist/errors.hpp"

namespace semitwist {

namespace {

GroupAction finish_action(GroupPtr group, RingPtr ring, AutPtr aut, std::vector<int> theta) {
  const FiniteGroup& G = *group;
  if (theta[G.id] != 0)
    throw validation_error(Violation::NotAHomomorphism, "(g=" + G.name(G.id) + ")",
                           "theta must send the identity to id_R");
  // exhaustive: theta(gh) = theta(g) . theta(h)
  for (Elem g = 0; g < G.n; ++g)
    for (Elem h = 0; h < G.n; ++h)
      if (theta[G.op(g, h)] != aut->group->op(theta[g], theta[h]))
        throw validation_error(Violation::NotAHomomorphism,
                               "(g=" + G.name(g) + ", h=" + G.name(h) + ")",
                               "theta(g*h) != theta(g)*theta(h)");
  GroupHom th{group, aut->group, std::move(theta)};
  return GroupAction{std::move(group), std::move(ring), std::move(aut), std::move(th)};
}

}  // namespace

GroupAction make_action(GroupPtr group, RingPtr ring, AutPtr aut,
                        const std::vector<std::pair<Elem, int>>& generator_images) {
  const FiniteGroup& G = *group;
  int n_aut = int(aut->autos.size());
  std::vector<int> theta(G.n, -1);
  theta[G.id] = 0;
  for (auto [g, k] : generator_images) {
    if (g < 0 || g >= G.n)
      throw validation_error(Violation::BadRecipe, "", "generator id out of range");
    if (k < 0 || k >= n_aut)
      throw validation_error(Violation::UnknownAutomorphism, "(index=" + std::to_string(k) + ")",
                             "no such automorphism of " + ring->label);
    if (theta[g] != -1 && theta[g] != k)
      throw validation_error(Violation::BadRecipe, "(g=" + G.name(g) + ")",
                             "conflicting images for a generator");
    theta[g] = k;
  }
  // close under the group operation; each new value is forced
  std::vector<Elem> known;
  for (Elem g = 0; g < G.n; ++g)
    if (theta[g] != -1) known.push_back(g);
  for (size_t qi = 0; qi < known.size(); ++qi) {
    for (size_t yi = 0; yi <= qi; ++yi) {
      Elem pairs[2][2] = {{known[qi], known[yi]}, {known[yi], known[qi]}};
      for (auto& pr : pairs) {
        Elem z = G.op(pr[0], pr[1]);
        int v = aut->group->op(theta[pr[0]], theta[pr[1]]);
        if (theta[z] == -1) {
          theta[z] = v;
          known.push_back(z);
        }
      }
    }
  }
  for (Elem g = 0; g < G.n; ++g)
    if (theta[g] == -1)
      throw validation_error(Violation::BadRecipe, "(g=" + G.name(g) + ")",
                             "assigned elements do not generate the group");
  return finish_action(std::move(group), std::move(ring), std::move(aut), std::move(theta));
}

GroupAction make_action_table(GroupPtr group, RingPtr ring, AutPtr aut, std::vector<int> theta) {
  if ((int)theta.size() != group->n)
    throw validation_error(Violation::BadRecipe, "", "theta table size mismatch");
  int n_aut = int(aut->autos.size());
  for (int k : theta)
    if (k < 0 || k >= n_aut)
      throw validation_error(Violation::UnknownAutomorphism, "(index=" + std::to_string(k) + ")",
                             "no such automorphism of " + ring->label);
  return finish_action(std::move(group), std::move(ring), std::move(aut), std::move(theta));
}

GroupAction trivial_action(GroupPtr group, RingPtr ring, AutPtr aut) {
  return make_action_table(std::move(group), std::move(ring), aut,
                           std::vector<int>(group ? group->n : 0, 0));
}

SliceGroupMorphism check_slice_morphism(const GroupAction& source, const GroupAction& target,
                                        GroupHom f) {
  if (source.ring != target.ring || source.aut != target.aut)
    throw validation_error(Violation::BadRecipe, "", "slice morphism needs a shared ring and Aut");
  if (f.src != source.group || f.dst != target.group)
    throw validation_error(Violation::BadRecipe, "", "slice morphism map has wrong endpoints");
  if (auto w = group_hom_violation(*f.src, *f.dst, f.map))
    throw validation_error(Violation::NotAHomomorphism, *w, "slice morphism is not a group hom");
  const FiniteGroup& G = *source.group;
  const FiniteRing& R = *source.ring;
  for (Elem g = 0; g < G.n; ++g) {
    if (source.theta.map[g] == target.theta.map[f.map[g]]) continue;
    // the automorphisms differ, so some r separates them
    const auto& a = source.aut->autos[source.theta.map[g]].map;
    const auto& b = target.aut->autos[target.theta.map[f.map[g]]].map;
    for (Elem r = 0; r < R.n; ++r)
      if (a[r] != b[r])
        throw validation_error(Violation::NotOverAut, "(g=" + G.name(g) + ", r=" + R.name(r) + ")",
                               "theta_g(r) != psi_{f(g)}(r)");
    throw std::logic_error("distinct automorphism indices with equal tables");
  }
  return SliceGroupMorphism{source, target, std::move(f)};
}

SliceGroupMorphism identity_slice(const GroupAction& a) {
  return SliceGroupMorphism{a, a, identity_group_hom(a.group)};
}

SliceGroupMorphism compose(const SliceGroupMorphism& j2, const SliceGroupMorphism& j1) {
  if (j1.target.group != j2.source.group)
    throw validation_error(Violation::BadRecipe, "", "slice morphisms not composable");
  return check_slice_morphism(j1.source, j2.target, compose(j2.f, j1.f));
}

CosliceObject identity_coslice_object(RingPtr r) {
  return CosliceObject{r, r, identity_ring_hom(r)};
}

CosliceRingMorphism check_coslice_morphism(const CosliceObject& source,
                                           const CosliceObject& target, RingHom h) {
  if (source.base != target.base)
    throw validation_error(Violation::BadRecipe, "", "coslice morphism needs a shared base ring");
  if (h.src != source.total || h.dst != target.total)
    throw validation_error(Violation::BadRecipe, "", "coslice morphism map has wrong endpoints");
  if (auto w = ring_hom_violation(*h.src, *h.dst, h.map))
    throw validation_error(Violation::NotAHomomorphism, *w, "coslice morphism is not a ring hom");
  const FiniteRing& R = *source.base;
  for (Elem r = 0; r < R.n; ++r)
    if (h.map[source.structure.map[r]] != target.structure.map[r])
      throw validation_error(Violation::NotUnderR, "(r=" + R.name(r) + ")",
                             "h does not commute with the structure maps");
  return CosliceRingMorphism{source, target, std::move(h)};
}

CosliceRingMorphism identity_coslice(const CosliceObject& o) {
  return CosliceRingMorphism{o, o, identity_ring_hom(o.total)};
}

CosliceRingMorphism compose(const CosliceRingMorphism& h2, const CosliceRingMorphism& h1) {
  if (h1.target.total != h2.source.total)
    throw validation_error(Violation::BadRecipe, "", "coslice morphisms not composable");
  return check_coslice_morphism(h1.source, h2.target, compose(h2.h, h1.h));
}

}  // namespace semitwist
