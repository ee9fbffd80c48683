#include "semitwist/twist.hpp"

#include <random>

#include "semitwist/errors.hpp"

namespace semitwist {

long long TwistedGroupRing::add_ids(long long a, long long b) const {
  const FiniteRing& R = *action.ring;
  const FiniteGroup& G = *action.group;
  long long out = 0;
  for (Elem g = 0; g < G.n; ++g) out += (long long)R.add(coeff(a, g), coeff(b, g)) * radix_pow[g];
  return out;
}

long long TwistedGroupRing::mul_ids(long long a, long long b) const {
  const FiniteRing& R = *action.ring;
  const FiniteGroup& G = *action.group;
  std::vector<Elem> acc(G.n, R.zero);
  for (Elem g = 0; g < G.n; ++g) {
    Elem ra = coeff(a, g);
    if (ra == R.zero) continue;
    for (Elem h = 0; h < G.n; ++h) {
      Elem rb = coeff(b, h);
      if (rb == R.zero) continue;
      Elem k = G.op(g, h);
      acc[k] = R.add(acc[k], R.mul(ra, action.apply(g, rb)));
    }
  }
  long long out = 0;
  for (Elem g = 0; g < G.n; ++g) out += (long long)acc[g] * radix_pow[g];
  return out;
}

std::string TwistedGroupRing::elem_name(long long id) const {
  const FiniteRing& R = *action.ring;
  const FiniteGroup& G = *action.group;
  std::string s;
  for (Elem g = 0; g < G.n; ++g) {
    Elem r = coeff(id, g);
    if (r == R.zero) continue;
    if (!s.empty()) s += " + ";
    s += R.name(r) + "*" + G.name(g);
  }
  return s.empty() ? "0" : s;
}

TwistedGroupRing twistify(const GroupAction& action, const Caps& caps) {
  const FiniteRing& R = *action.ring;
  const FiniteGroup& G = *action.group;

  TwistedGroupRing tw;
  tw.action = action;
  __int128 sz = 1;
  for (int i = 0; i < G.n; ++i) {
    sz *= R.n;
    if (sz > caps.twist) {
      long long req = sz > (__int128)9223372036854775807ll ? 9223372036854775807ll : (long long)sz;
      throw cap_exceeded("twist", caps.twist, req);
    }
  }
  tw.size = (long long)sz;

  tw.radix_pow.assign(G.n, 1);
  for (int g = G.n - 2; g >= 0; --g) tw.radix_pow[g] = tw.radix_pow[g + 1] * R.n;

  tw.structure_table.resize(R.n);
  for (Elem r = 0; r < R.n; ++r) tw.structure_table[r] = Elem(tw.monomial(r, G.id));

  if (tw.size <= caps.materialize) {
    int n = int(tw.size);
    std::vector<Elem> add(size_t(n) * n), mul(size_t(n) * n);
    std::vector<std::string> names(n);
    for (Elem a = 0; a < n; ++a) {
      names[a] = tw.elem_name(a);
      for (Elem b = 0; b < n; ++b) {
        add[size_t(a) * n + b] = Elem(tw.add_ids(a, b));
        mul[size_t(a) * n + b] = Elem(tw.mul_ids(a, b));
      }
    }
    // all axioms re-checked exhaustively; associativity of the twisted
    // product is exactly what theta being an action buys
    tw.ring = check_ring_tables(R.label + "_theta[" + G.label + "]", n, 0,
                                Elem(tw.one_id()), std::move(add), std::move(mul),
                                std::move(names));
    tw.structure = make_ring_hom(action.ring, tw.ring, tw.structure_table);
  } else {
    TwistAxiomReport rep = verify_twisted_axioms(tw);
    if (!rep.pass)
      throw validation_error(Violation::NotAssociative, rep.witness,
                             "twisted product failed sampled axiom checks");
  }
  return tw;
}

TwistAxiomReport verify_twisted_axioms(const TwistedGroupRing& tw) {
  const FiniteRing& R = *tw.action.ring;
  const FiniteGroup& G = *tw.action.group;
  TwistAxiomReport rep;

  if (tw.materialized()) {
    rep.exhaustive = true;
    const FiniteRing& T = *tw.ring;
    rep.checked_triples = (long long)T.n * T.n * T.n;
    try {
      check_ring_tables(T.label, T.n, T.zero, T.one, T.add_table, T.mul_table, T.names);
    } catch (const validation_error& e) {
      rep.pass = false;
      rep.witness = e.witness();
    }
    return rep;
  }

  // every monomial associativity triple: products of monomials stay monomial,
  // (r1 g1)(r2 g2) = (r1 theta_g1(r2), g1 g2)
  for (Elem g1 = 0; g1 < G.n && rep.pass; ++g1)
    for (Elem g2 = 0; g2 < G.n && rep.pass; ++g2)
      for (Elem g3 = 0; g3 < G.n && rep.pass; ++g3)
        for (Elem r1 = 0; r1 < R.n && rep.pass; ++r1)
          for (Elem r2 = 0; r2 < R.n && rep.pass; ++r2)
            for (Elem r3 = 0; r3 < R.n; ++r3) {
              Elem left_r = R.mul(R.mul(r1, tw.action.apply(g1, r2)),
                                  tw.action.apply(G.op(g1, g2), r3));
              Elem right_r = R.mul(r1, tw.action.apply(g1, R.mul(r2, tw.action.apply(g2, r3))));
              ++rep.checked_triples;
              if (left_r != right_r || G.op(G.op(g1, g2), g3) != G.op(g1, G.op(g2, g3))) {
                rep.pass = false;
                rep.witness = "(" + R.name(r1) + "*" + G.name(g1) + ", " + R.name(r2) + "*" +
                              G.name(g2) + ", " + R.name(r3) + "*" + G.name(g3) + ")";
                break;
              }
            }

  // 10^4 random general triples, fixed seed
  std::mt19937_64 rng(0x5E1F5EEDull);
  std::uniform_int_distribution<long long> dist(0, tw.size - 1);
  for (int i = 0; i < 10000 && rep.pass; ++i) {
    long long a = dist(rng), b = dist(rng), c = dist(rng);
    ++rep.checked_triples;
    bool ok = tw.add_ids(a, b) == tw.add_ids(b, a) &&
              tw.add_ids(tw.add_ids(a, b), c) == tw.add_ids(a, tw.add_ids(b, c)) &&
              tw.mul_ids(tw.mul_ids(a, b), c) == tw.mul_ids(a, tw.mul_ids(b, c)) &&
              tw.mul_ids(a, tw.add_ids(b, c)) == tw.add_ids(tw.mul_ids(a, b), tw.mul_ids(a, c)) &&
              tw.mul_ids(tw.add_ids(a, b), c) == tw.add_ids(tw.mul_ids(a, c), tw.mul_ids(b, c)) &&
              tw.mul_ids(a, tw.one_id()) == a && tw.mul_ids(tw.one_id(), a) == a;
    if (!ok) {
      rep.pass = false;
      rep.witness = "(ids " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                    std::to_string(c) + ")";
    }
  }
  return rep;
}

CosliceObject twisted_coslice(const TwistedGroupRing& tw) {
  if (!tw.materialized())
    throw cap_exceeded("materialize", tw.size - 1, tw.size);
  return CosliceObject{tw.action.ring, tw.ring, tw.structure};
}

CosliceRingMorphism twistify_morphism(const SliceGroupMorphism& j, const TwistedGroupRing& tw_src,
                                      const TwistedGroupRing& tw_dst) {
  if (!tw_src.materialized() || !tw_dst.materialized())
    throw cap_exceeded("materialize", std::min(tw_src.size, tw_dst.size) - 1,
                       std::max(tw_src.size, tw_dst.size));
  const FiniteRing& R = *j.source.ring;
  const FiniteGroup& G = *j.source.group;
  std::vector<Elem> map(tw_src.size);
  for (long long t = 0; t < tw_src.size; ++t) {
    // r*g -> r*f(g), extended additively; coefficients can merge
    std::vector<Elem> acc(j.target.group->n, R.zero);
    for (Elem g = 0; g < G.n; ++g) {
      Elem fg = j.f.map[g];
      acc[fg] = R.add(acc[fg], tw_src.coeff(t, g));
    }
    long long out = 0;
    for (Elem k = 0; k < j.target.group->n; ++k) out += (long long)acc[k] * tw_dst.radix_pow[k];
    map[t] = Elem(out);
  }
  RingHom F = make_ring_hom(tw_src.ring, tw_dst.ring, std::move(map));
  return check_coslice_morphism(twisted_coslice(tw_src), twisted_coslice(tw_dst), std::move(F));
}

CosliceRingMorphism twistify_morphism(const SliceGroupMorphism& j, const Caps& caps) {
  TwistedGroupRing tw_src = twistify(j.source, caps);
  TwistedGroupRing tw_dst = twistify(j.target, caps);
  return twistify_morphism(j, tw_src, tw_dst);
}

}  // namespace semitwist
