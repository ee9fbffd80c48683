#include "semitwist/adjunction.hpp"

#include <algorithm>
#include <map>

#include "semitwist/errors.hpp"

namespace semitwist {

namespace {

void require_materialized(const TwistedGroupRing& tw) {
  if (!tw.materialized()) throw cap_exceeded("materialize", tw.size - 1, tw.size);
}

void require_under_r(const TwistedGroupRing& tw, const CosliceObject& target, const RingHom& f) {
  if (f.src != tw.ring || f.dst != target.total)
    throw validation_error(Violation::BadRecipe, "", "hom endpoints do not match the coslice");
  const FiniteRing& R = *tw.action.ring;
  for (Elem r = 0; r < R.n; ++r)
    if (f.map[tw.structure_table[r]] != target.structure.map[r])
      throw validation_error(Violation::NotUnderR, "(r=" + R.name(r) + ")",
                             "hom does not restrict to the structure map");
}

}  // namespace

GroupHom pi_map(const TwistedGroupRing& tw, const SemiGroup& semi, const RingHom& f) {
  require_materialized(tw);
  require_under_r(tw, semi.base, f);
  const FiniteGroup& G = *tw.action.group;
  std::vector<Elem> map(G.n);
  for (Elem g = 0; g < G.n; ++g) {
    Elem s = f.map[Elem(tw.monomial(tw.action.ring->one, g))];
    int idx = semi.index_of(s, tw.action.theta.map[g]);
    if (idx < 0)
      throw std::logic_error("pi image (f(1_R g), theta_g) not in semi_R(S): implementation bug");
    map[g] = idx;
  }
  GroupHom alpha = make_group_hom(tw.action.group, semi.group, std::move(map));
  for (Elem g = 0; g < G.n; ++g)
    if (semi.to_aut.map[alpha.map[g]] != tw.action.theta.map[g])
      throw std::logic_error("pi image does not lie over theta: implementation bug");
  return alpha;
}

RingHom pi_inverse_map(const TwistedGroupRing& tw, const SemiGroup& semi, const GroupHom& alpha) {
  require_materialized(tw);
  if (alpha.src != tw.action.group || alpha.dst != semi.group)
    throw validation_error(Violation::BadRecipe, "", "alpha endpoints mismatch");
  const FiniteGroup& G = *tw.action.group;
  for (Elem g = 0; g < G.n; ++g)
    if (semi.to_aut.map[alpha.map[g]] != tw.action.theta.map[g])
      throw validation_error(Violation::NotOverAut, "(g=" + G.name(g) + ")",
                             "alpha does not lie over theta");

  const FiniteRing& S = *semi.base.total;
  const std::vector<Elem>& chi = semi.base.structure.map;
  std::vector<Elem> map(tw.size);
  for (long long t = 0; t < tw.size; ++t) {
    Elem acc = S.zero;
    for (Elem g = 0; g < G.n; ++g) {
      Elem r = tw.coeff(t, g);
      if (r == tw.action.ring->zero) continue;
      acc = S.add(acc, S.mul(chi[r], semi.to_units[alpha.map[g]]));
    }
    map[t] = acc;
  }
  // multiplicativity re-validated exhaustively (make_ring_hom checks all pairs)
  RingHom f = make_ring_hom(tw.ring, semi.base.total, std::move(map));
  require_under_r(tw, semi.base, f);
  return f;
}

HomSetUnder enumerate_homs_under(const TwistedGroupRing& tw, const CosliceObject& target,
                                 const Caps& caps) {
  require_materialized(tw);
  if (target.base != tw.action.ring)
    throw validation_error(Violation::BadRecipe, "", "coslice base is not the action's ring");
  const FiniteRing& S = *target.total;
  const FiniteGroup& G = *tw.action.group;
  const std::vector<Elem>& f0 = target.structure.map;

  // h is determined by the values h(1_R g); those values are units and
  // g -> h(1_R g) is multiplicative, so search group homs G -> S^x and keep
  // the ones whose bilinear extension really is a ring hom under R
  UnitGroup units = enumerate_units(S);
  int nu = int(units.units.size());
  std::vector<int> unit_index(S.n, -1);
  for (int i = 0; i < nu; ++i) unit_index[units.units[i]] = i;
  std::vector<Elem> uop(size_t(nu) * nu);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      int k = unit_index[S.mul(units.units[i], units.units[j])];
      if (k < 0) throw std::logic_error("product of units is not a unit");
      uop[size_t(i) * nu + j] = k;
    }
  GroupPtr ugroup =
      check_group_tables(S.label + "^x", nu, unit_index[S.one], std::move(uop));

  HomSetUnder out;
  out.target = target;
  for (const GroupHom& u : group_hom_search(tw.action.group, ugroup, {}, caps)) {
    std::vector<Elem> map(tw.size);
    for (long long t = 0; t < tw.size; ++t) {
      Elem acc = S.zero;
      for (Elem g = 0; g < G.n; ++g) {
        Elem r = tw.coeff(t, g);
        if (r == tw.action.ring->zero) continue;
        acc = S.add(acc, S.mul(f0[r], units.units[u.map[g]]));
      }
      map[t] = acc;
    }
    if (ring_hom_violation(*tw.ring, S, map)) continue;
    RingHom h{tw.ring, target.total, std::move(map)};
    bool under = true;
    for (Elem r = 0; r < tw.action.ring->n && under; ++r)
      under = h.map[tw.structure_table[r]] == f0[r];
    if (under) out.homs.push_back(std::move(h));
  }
  std::sort(out.homs.begin(), out.homs.end(),
            [](const RingHom& a, const RingHom& b) { return a.map < b.map; });
  return out;
}

HomSetOver enumerate_homs_over(const GroupAction& action, const SemiGroup& semi,
                               const Caps& caps) {
  // fiber-wise constrained group hom search: alpha(g) must project to theta_g
  StructureView sv = group_view(*action.group);
  StructureView dv = group_view(*semi.group);
  GenPlan plan = make_gen_plan(sv);
  TableSearchOptions opts;
  opts.node_budget = caps.search_nodes;
  const std::vector<Elem>& proj = semi.to_aut.map;
  const std::vector<Elem>& theta = action.theta.map;
  opts.image_ok = [&proj, &theta](Elem g, Elem k) { return proj[k] == theta[g]; };

  HomSetOver out;
  for (auto& table : search_hom_tables(sv, dv, plan, opts))
    out.homs.push_back(GroupHom{action.group, semi.group, std::move(table)});
  std::sort(out.homs.begin(), out.homs.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
  return out;
}

BijectionData verify_bijection_data(const GroupAction& action, const CosliceObject& target,
                                    const Caps& caps) {
  BijectionData d{twistify(action, caps), SemiGroup{}, HomSetUnder{}, HomSetOver{}, {}};
  require_materialized(d.tw);
  d.semi = semilinearize(target, action.aut, caps);
  d.under = enumerate_homs_under(d.tw, target, caps);
  d.over = enumerate_homs_over(action, d.semi, caps);

  BijectionReport& rep = d.report;
  rep.n_under = (long long)d.under.homs.size();
  rep.n_over = (long long)d.over.homs.size();
  rep.counts_equal = rep.n_under == rep.n_over;

  std::map<std::vector<Elem>, int> over_index;
  for (size_t i = 0; i < d.over.homs.size(); ++i) over_index[d.over.homs[i].map] = int(i);

  const FiniteGroup& G = *action.group;
  rep.injective = rep.round_trip_under = true;
  std::vector<char> hit(d.over.homs.size(), 0);
  for (size_t i = 0; i < d.under.homs.size(); ++i) {
    GroupHom alpha = pi_map(d.tw, d.semi, d.under.homs[i]);
    auto it = over_index.find(alpha.map);
    if (it == over_index.end()) {
      rep.injective = false;
      rep.witness = "pi image of hom " + std::to_string(i) + " missing from the over side";
      continue;
    }
    if (hit[it->second]) {
      rep.injective = false;
      rep.witness = "pi collision at over-hom " + std::to_string(it->second);
    }
    hit[it->second] = 1;
    if (!(pi_inverse_map(d.tw, d.semi, alpha).map == d.under.homs[i].map)) {
      rep.round_trip_under = false;
      rep.witness = "pi_inverse(pi(f)) != f at hom " + std::to_string(i);
    }
    std::string line;
    for (Elem g = 0; g < G.n; ++g) {
      if (g == G.id) continue;
      if (!line.empty()) line += ", ";
      line += "1*" + G.name(g) + " -> " +
              target.total->name(d.under.homs[i].map[Elem(d.tw.monomial(action.ring->one, g))]);
    }
    if (line.empty()) line = "(G trivial)";
    rep.correspondence.push_back("f" + std::to_string(i) + ": " + line + "  <->  alpha" +
                                 std::to_string(it->second));
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  rep.round_trip_over = true;
  for (size_t i = 0; i < d.over.homs.size(); ++i) {
    RingHom f = pi_inverse_map(d.tw, d.semi, d.over.homs[i]);
    if (!(pi_map(d.tw, d.semi, f).map == d.over.homs[i].map)) {
      rep.round_trip_over = false;
      rep.witness = "pi(pi_inverse(alpha)) != alpha at hom " + std::to_string(i);
    }
  }

  // unit of the correspondence: g -> (1_R g, theta_g) must land in
  // semi_R(R_theta[G]); this is pi of the identity hom
  try {
    CosliceObject selfc = twisted_coslice(d.tw);
    SemiGroup semi_self = semilinearize(selfc, action.aut, caps);
    pi_map(d.tw, semi_self, identity_ring_hom(d.tw.ring));
    rep.unit_hom_valid = true;
  } catch (const std::logic_error&) {
    rep.unit_hom_valid = false;
    rep.witness = "unit hom g -> (1_R g, theta_g) failed validation";
  }
  return d;
}

BijectionReport verify_bijection(const GroupAction& action, const CosliceObject& target,
                                 const Caps& caps) {
  return verify_bijection_data(action, target, caps).report;
}

NaturalityReport verify_naturality(const SliceGroupMorphism& j, const CosliceRingMorphism& h,
                                   const RingHom& mu, const RingHom& lambda, const Caps& caps) {
  TwistedGroupRing tw_g = twistify(j.source, caps);
  TwistedGroupRing tw_k = twistify(j.target, caps);
  require_materialized(tw_g);
  require_materialized(tw_k);
  require_under_r(tw_g, h.source, mu);
  require_under_r(tw_k, h.target, lambda);

  NaturalityReport rep;
  const FiniteGroup& G = *j.source.group;
  const FiniteRing& R = *j.source.ring;

  // left square in Ring: h . mu  vs  lambda . T(j)
  CosliceRingMorphism Tj = twistify_morphism(j, tw_g, tw_k);
  RingHom left_a = compose(h.h, mu);
  RingHom left_b = compose(lambda, Tj.h);
  rep.left_commutes = left_a.map == left_b.map;

  // both composites agree on r*e_G automatically; the 1_R g slots decide
  rep.monomials_agree = true;
  for (Elem g = 0; g < G.n; ++g) {
    Elem m = Elem(tw_g.monomial(R.one, g));
    if (left_a.map[m] != left_b.map[m]) {
      rep.monomials_agree = false;
      if (rep.witness.empty()) rep.witness = "disagree at 1*" + G.name(g);
    }
  }

  // right square in Grp: semi(h) . pi(mu)  vs  pi(lambda) . j
  SemiGroup semi_s = semilinearize(h.source, j.source.aut, caps);
  SemiGroup semi_t = semilinearize(h.target, j.source.aut, caps);
  GroupHom semi_h = semilinearize_morphism(h, semi_s, semi_t);
  GroupHom right_a = compose(semi_h, pi_map(tw_g, semi_s, mu));
  GroupHom right_b = compose(pi_map(tw_k, semi_t, lambda), j.f);
  rep.right_commutes = right_a.map == right_b.map;

  // aut components agree over theta on both composites, so the right square
  // also reduces to the unit slots
  bool right_units_agree = true;
  for (Elem g = 0; g < G.n; ++g)
    if (semi_t.to_units[right_a.map[g]] != semi_t.to_units[right_b.map[g]])
      right_units_agree = false;

  rep.iff_holds = rep.left_commutes == rep.right_commutes;
  rep.reduction_holds = (rep.left_commutes == rep.monomials_agree) &&
                        (rep.right_commutes == rep.monomials_agree) &&
                        (right_units_agree == rep.monomials_agree);
  return rep;
}

CorollaryReport verify_modules_corollary(const GroupAction& action, const ModuleStructure& m,
                                         const Caps& caps) {
  CosliceObject target{action.ring, m.endos.ring, m.chi};
  BijectionData d = verify_bijection_data(action, target, caps);
  CorollaryReport rep;
  rep.bijection = d.report;
  rep.n_extensions = (long long)d.under.homs.size();
  rep.n_actions = (long long)d.over.homs.size();
  rep.correspondence = d.report.correspondence;
  return rep;
}

}  // namespace semitwist
