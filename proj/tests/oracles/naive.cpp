#include "oracles/naive.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace semitwist::oracle {

RingPtr group_ring_naive(const RingPtr& r, const GroupPtr& g) {
  const FiniteRing& R = *r;
  const FiniteGroup& G = *g;
  long long size = 1;
  for (int i = 0; i < G.n; ++i) {
    size *= R.n;
    if (size > (1 << 20)) throw std::logic_error("naive group ring oracle: instance too large");
  }
  std::vector<long long> pow(G.n, 1);
  for (int i = G.n - 2; i >= 0; --i) pow[i] = pow[i + 1] * R.n;
  auto coeff = [&](long long id, Elem gg) { return Elem((id / pow[gg]) % R.n); };

  int n = int(size);
  std::vector<Elem> add(size_t(n) * n), mul(size_t(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      long long s = 0;
      std::vector<Elem> conv(G.n, R.zero);
      for (Elem gg = 0; gg < G.n; ++gg) {
        s += (long long)R.add(coeff(a, gg), coeff(b, gg)) * pow[gg];
        // convolution: c[k] = sum over gh = k of a_g * b_h
        for (Elem hh = 0; hh < G.n; ++hh) {
          Elem k = G.op(gg, hh);
          conv[k] = R.add(conv[k], R.mul(coeff(a, gg), coeff(b, hh)));
        }
      }
      long long p = 0;
      for (Elem gg = 0; gg < G.n; ++gg) p += (long long)conv[gg] * pow[gg];
      add[size_t(a) * n + b] = Elem(s);
      mul[size_t(a) * n + b] = Elem(p);
    }
  return check_ring_tables(R.label + "[" + G.label + "]", n, 0,
                           Elem(R.one * pow[G.id]), std::move(add), std::move(mul));
}

std::vector<std::vector<Elem>> automorphisms_bruteforce(const FiniteRing& r) {
  if (r.n > 8) throw std::logic_error("bijection brute force limited to |R| <= 8");
  std::vector<Elem> perm(r.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Elem>> out;
  do {
    if (!ring_hom_violation(r, r, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Check>
std::vector<std::vector<Elem>> table_odometer(int n_src, int n_dst, Check check) {
  double total = 1;
  for (int i = 0; i < n_src; ++i) total *= n_dst;
  if (total > 2e7) throw std::logic_error("value-table odometer: instance too large");
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> map(n_src, 0);
  while (true) {
    if (check(map)) out.push_back(map);
    int i = 0;
    for (; i < n_src; ++i) {
      if (++map[i] < n_dst) break;
      map[i] = 0;
    }
    if (i == n_src) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Elem>> ring_homs_bruteforce(const FiniteRing& src, const FiniteRing& dst) {
  return table_odometer(src.n, dst.n, [&](const std::vector<Elem>& m) {
    return !ring_hom_violation(src, dst, m).has_value();
  });
}

std::vector<std::vector<Elem>> group_homs_bruteforce(const FiniteGroup& src,
                                                     const FiniteGroup& dst) {
  return table_odometer(src.n, dst.n, [&](const std::vector<Elem>& m) {
    return !group_hom_violation(src, dst, m).has_value();
  });
}

std::vector<std::vector<Elem>> homs_under_tables_naive(const TwistedGroupRing& tw,
                                                       const CosliceObject& target) {
  if (!tw.materialized()) throw std::logic_error("naive hom search needs a materialized ring");
  const FiniteRing& T = *tw.ring;
  const FiniteRing& S = *target.total;
  int n = T.n;

  std::vector<Elem> img(n, -1);
  // pin the structure-map slots
  std::vector<Elem> pin(n, -1);
  for (Elem r = 0; r < tw.action.ring->n; ++r)
    pin[tw.structure_table[r]] = target.structure.map[r];

  std::vector<std::vector<Elem>> out;

  // all add/mul constraints among assigned elements involving e must hold
  auto consistent_at = [&](Elem e) {
    for (Elem a = 0; a < n; ++a) {
      if (img[a] < 0) continue;
      Elem s1 = T.add(a, e), s2 = T.add(e, a);
      if (img[s1] >= 0 && img[s1] != S.add(img[a], img[e])) return false;
      if (img[s2] >= 0 && img[s2] != S.add(img[e], img[a])) return false;
      Elem m1 = T.mul(a, e), m2 = T.mul(e, a);
      if (img[m1] >= 0 && img[m1] != S.mul(img[a], img[e])) return false;
      if (img[m2] >= 0 && img[m2] != S.mul(img[e], img[a])) return false;
      // results landing on e
      for (Elem b = 0; b < n; ++b) {
        if (img[b] < 0) continue;
        if (T.add(a, b) == e && S.add(img[a], img[b]) != img[e]) return false;
        if (T.mul(a, b) == e && S.mul(img[a], img[b]) != img[e]) return false;
      }
    }
    return true;
  };

  std::function<void(Elem)> rec = [&](Elem e) {
    if (e == n) {
      if (!ring_hom_violation(T, S, img)) out.push_back(img);
      return;
    }
    if (pin[e] >= 0) {
      img[e] = pin[e];
      if (consistent_at(e)) rec(e + 1);
      img[e] = -1;
      return;
    }
    for (Elem v = 0; v < S.n; ++v) {
      img[e] = v;
      if (consistent_at(e)) rec(e + 1);
    }
    img[e] = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool semi_member_full(const CosliceObject& f, const std::vector<Elem>& phi_table, Elem s) {
  const FiniteRing& S = *f.total;
  for (Elem r = 0; r < f.base->n; ++r)
    if (S.mul(s, f.structure.map[r]) != S.mul(f.structure.map[phi_table[r]], s)) return false;
  return true;
}

std::vector<std::vector<Elem>> homs_over_bruteforce(const GroupAction& action,
                                                    const SemiGroup& semi) {
  const FiniteGroup& G = *action.group;
  return table_odometer(G.n, semi.group->n, [&](const std::vector<Elem>& m) {
    if (group_hom_violation(G, *semi.group, m)) return false;
    for (Elem g = 0; g < G.n; ++g)
      if (semi.to_aut.map[m[g]] != action.theta.map[g]) return false;
    return true;
  });
}

}  // namespace semitwist::oracle
