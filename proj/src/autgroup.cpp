#include "semitwist/autgroup.hpp"

#include <algorithm>

#include "semitwist/errors.hpp"

namespace semitwist {

int AutGroup::index_of_table(const std::vector<Elem>& table) const {
  // autos are sorted by value table
  auto it = std::lower_bound(autos.begin(), autos.end(), table,
                             [](const RingHom& h, const std::vector<Elem>& t) { return h.map < t; });
  if (it == autos.end() || it->map != table) return -1;
  return int(it - autos.begin());
}

AutPtr enumerate_automorphisms(RingPtr r, const Caps& caps) {
  if (r->n > caps.ring) throw cap_exceeded("ring", caps.ring, r->n);

  HomConstraints c;
  c.bijective_only = true;
  std::vector<RingHom> autos = ring_hom_search(r, r, c, caps);

  auto ag = std::make_shared<AutGroup>();
  ag->ring = r;
  ag->autos = std::move(autos);
  // identity is lexicographically minimal among bijections, hence index 0
  if (ag->autos.empty() || ag->autos[0].map != identity_ring_hom(r).map)
    throw std::logic_error("automorphism enumeration lost the identity");

  int m = int(ag->autos.size());
  std::vector<Elem> op(size_t(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // (i after j): apply autos[j] first
      std::vector<Elem> comp(r->n);
      for (Elem x = 0; x < r->n; ++x) comp[x] = ag->autos[i].map[ag->autos[j].map[x]];
      int k = ag->index_of_table(comp);
      if (k < 0) throw std::logic_error("automorphism set not closed under composition");
      op[size_t(i) * m + j] = k;
    }
  std::vector<std::string> names(m);
  names[0] = "id";
  for (int i = 1; i < m; ++i) names[i] = "aut" + std::to_string(i);
  ag->group = check_group_tables("Aut(" + r->label + ")", m, 0, std::move(op), std::move(names));
  return ag;
}

}  // namespace semitwist
