#include "semitwist/hom.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <span>

#include "semitwist/errors.hpp"

namespace semitwist {

std::optional<std::string> ring_hom_violation(const FiniteRing& src, const FiniteRing& dst,
                                              const std::vector<Elem>& map) {
  if (map.size() != size_t(src.n)) return "map size mismatch";
  for (Elem v : map)
    if (v < 0 || v >= dst.n) return "image out of range";
  if (map[src.zero] != dst.zero) return "zero not preserved";
  if (map[src.one] != dst.one) return "one not preserved";
  for (Elem a = 0; a < src.n; ++a)
    for (Elem b = 0; b < src.n; ++b) {
      if (map[src.add(a, b)] != dst.add(map[a], map[b]))
        return "addition not preserved at (" + src.name(a) + ", " + src.name(b) + ")";
      if (map[src.mul(a, b)] != dst.mul(map[a], map[b]))
        return "multiplication not preserved at (" + src.name(a) + ", " + src.name(b) + ")";
    }
  return std::nullopt;
}

std::optional<std::string> group_hom_violation(const FiniteGroup& src, const FiniteGroup& dst,
                                               const std::vector<Elem>& map) {
  if (map.size() != size_t(src.n)) return "map size mismatch";
  for (Elem v : map)
    if (v < 0 || v >= dst.n) return "image out of range";
  if (map[src.id] != dst.id) return "identity not preserved";
  for (Elem a = 0; a < src.n; ++a)
    for (Elem b = 0; b < src.n; ++b)
      if (map[src.op(a, b)] != dst.op(map[a], map[b]))
        return "operation not preserved at (" + src.name(a) + ", " + src.name(b) + ")";
  return std::nullopt;
}

RingHom make_ring_hom(RingPtr src, RingPtr dst, std::vector<Elem> map) {
  if (auto w = ring_hom_violation(*src, *dst, map))
    throw validation_error(Violation::NotAHomomorphism, *w,
                           "not a ring homomorphism " + src->label + " -> " + dst->label);
  return RingHom{std::move(src), std::move(dst), std::move(map)};
}

GroupHom make_group_hom(GroupPtr src, GroupPtr dst, std::vector<Elem> map) {
  if (auto w = group_hom_violation(*src, *dst, map))
    throw validation_error(Violation::NotAHomomorphism, *w,
                           "not a group homomorphism " + src->label + " -> " + dst->label);
  return GroupHom{std::move(src), std::move(dst), std::move(map)};
}

RingHom identity_ring_hom(RingPtr r) {
  std::vector<Elem> map(r->n);
  std::iota(map.begin(), map.end(), 0);
  return RingHom{r, r, std::move(map)};
}

GroupHom identity_group_hom(GroupPtr g) {
  std::vector<Elem> map(g->n);
  std::iota(map.begin(), map.end(), 0);
  return GroupHom{g, g, std::move(map)};
}

RingHom compose(const RingHom& after, const RingHom& before) {
  std::vector<Elem> map(before.map.size());
  for (size_t i = 0; i < map.size(); ++i) map[i] = after.map[before.map[i]];
  return RingHom{before.src, after.dst, std::move(map)};
}

GroupHom compose(const GroupHom& after, const GroupHom& before) {
  std::vector<Elem> map(before.map.size());
  for (size_t i = 0; i < map.size(); ++i) map[i] = after.map[before.map[i]];
  return GroupHom{before.src, after.dst, std::move(map)};
}

bool is_bijective_table(const std::vector<Elem>& map, int n_dst) {
  if ((int)map.size() != n_dst) return false;
  std::vector<char> seen(n_dst, 0);
  for (Elem v : map) {
    if (v < 0 || v >= n_dst || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

StructureView ring_view(const FiniteRing& r) {
  return StructureView{r.n, {&r.add_table, &r.mul_table}, {r.zero, r.one}};
}

StructureView group_view(const FiniteGroup& g) {
  return StructureView{g.n, {&g.op_table}, {g.id}};
}

namespace {

struct Closure {
  std::vector<Elem> list;  // discovery order
  std::vector<char> in;
  std::vector<DerivStep> steps;  // derivations of non-seed elements
};

// Pairwise closure under all ops. Each element, when dequeued, is paired
// (both orders) with everything discovered no later than itself, so every
// ordered pair is visited exactly once; discovery order is deterministic.
Closure close_under_ops(const StructureView& s, std::span<const Elem> seed, bool record) {
  Closure c{{}, std::vector<char>(s.n, 0), {}};
  auto push = [&](Elem e) {
    if (c.in[e]) return false;
    c.in[e] = 1;
    c.list.push_back(e);
    return true;
  };
  for (Elem e : seed) push(e);
  for (size_t qi = 0; qi < c.list.size(); ++qi) {
    Elem x = c.list[qi];
    for (size_t yi = 0; yi <= qi; ++yi) {
      Elem y = c.list[yi];
      for (int op = 0; op < (int)s.ops.size(); ++op) {
        const auto& t = *s.ops[op];
        Elem xy = t[size_t(x) * s.n + y];
        if (push(xy) && record) c.steps.push_back({xy, op, x, y});
        Elem yx = t[size_t(y) * s.n + x];
        if (push(yx) && record) c.steps.push_back({yx, op, y, x});
      }
    }
  }
  return c;
}

}  // namespace

GenPlan make_gen_plan(const StructureView& s) {
  GenPlan plan;
  Closure cur = close_under_ops(s, s.pinned, true);
  plan.stages.push_back(std::move(cur.steps));
  while ((int)cur.list.size() < s.n) {
    // greedy: the element whose adjunction grows the closure most
    Elem best = -1;
    size_t best_size = 0;
    for (Elem x = 0; x < s.n; ++x) {
      if (cur.in[x]) continue;
      std::vector<Elem> trial(cur.list);
      trial.push_back(x);
      Closure t = close_under_ops(s, trial, false);
      if (t.list.size() > best_size) {
        best_size = t.list.size();
        best = x;
      }
    }
    std::vector<Elem> seed(cur.list);
    seed.push_back(best);
    Closure nxt = close_under_ops(s, seed, true);
    plan.generators.push_back(best);
    plan.stages.push_back(nxt.steps);
    cur = std::move(nxt);
  }
  return plan;
}

std::vector<std::vector<Elem>> search_hom_tables(const StructureView& src,
                                                 const StructureView& dst, const GenPlan& plan,
                                                 const TableSearchOptions& opts) {
  if (src.ops.size() != dst.ops.size() || src.pinned.size() != dst.pinned.size())
    throw std::logic_error("hom search: incompatible structure signatures");
  std::vector<std::vector<Elem>> out;
  if (opts.bijective_only && src.n != dst.n) return out;

  std::vector<Elem> img(src.n, -1);
  std::vector<char> used(dst.n, 0);
  std::vector<Elem> known;
  known.reserve(src.n);
  long long nodes = 0;

  auto assign = [&](Elem e, Elem v) -> bool {
    if (img[e] != -1) return img[e] == v;
    if (opts.image_ok && !opts.image_ok(e, v)) return false;
    if (opts.bijective_only) {
      if (used[v]) return false;
      used[v] = 1;
    }
    img[e] = v;
    known.push_back(e);
    return true;
  };
  auto undo_to = [&](size_t mark) {
    while (known.size() > mark) {
      Elem e = known.back();
      known.pop_back();
      if (opts.bijective_only) used[img[e]] = 0;
      img[e] = -1;
    }
  };
  auto apply_stage = [&](const std::vector<DerivStep>& steps) -> bool {
    for (const auto& st : steps) {
      if (++nodes > opts.node_budget)
        throw cap_exceeded("search_nodes", opts.node_budget, nodes);
      Elem v = (*dst.ops[st.op])[size_t(img[st.lhs]) * dst.n + img[st.rhs]];
      if (!assign(st.result, v)) return false;
    }
    return true;
  };
  // op-compatibility of the new suffix against everything known. The known
  // set is closed under ops after each completed stage, so every referenced
  // image exists.
  auto consistent_from = [&](size_t mark) -> bool {
    for (size_t i = mark; i < known.size(); ++i) {
      Elem a = known[i];
      for (size_t j = 0; j < known.size(); ++j) {
        Elem b = known[j];
        for (size_t op = 0; op < src.ops.size(); ++op) {
          const auto& ts = *src.ops[op];
          const auto& td = *dst.ops[op];
          if (img[ts[size_t(a) * src.n + b]] != td[size_t(img[a]) * dst.n + img[b]]) return false;
          if (img[ts[size_t(b) * src.n + a]] != td[size_t(img[b]) * dst.n + img[a]]) return false;
        }
      }
    }
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == plan.generators.size()) {
      out.push_back(img);
      return;
    }
    std::vector<Elem> cand(dst.n);
    std::iota(cand.begin(), cand.end(), 0);
    if (opts.shuffle_seed) {
      std::mt19937_64 rng(opts.shuffle_seed ^ (0x9E3779B97F4A7C15ull * (k + 1)));
      std::shuffle(cand.begin(), cand.end(), rng);
    }
    Elem gen = plan.generators[k];
    for (Elem v : cand) {
      if (++nodes > opts.node_budget)
        throw cap_exceeded("search_nodes", opts.node_budget, nodes);
      size_t mark = known.size();
      if (assign(gen, v) && apply_stage(plan.stages[k + 1]) && consistent_from(mark)) rec(k + 1);
      undo_to(mark);
    }
  };

  bool root_ok = true;
  for (size_t i = 0; i < src.pinned.size() && root_ok; ++i)
    root_ok = assign(src.pinned[i], dst.pinned[i]);
  if (root_ok && apply_stage(plan.stages[0]) && consistent_from(0)) rec(0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::function<bool(Elem, Elem)> pin_predicate(int n, const std::vector<std::pair<Elem, Elem>>& pin,
                                              bool* impossible) {
  *impossible = false;
  if (pin.empty()) return nullptr;
  std::vector<Elem> want(n, -1);
  for (auto [e, v] : pin) {
    if (e < 0 || e >= n) {
      *impossible = true;
      return nullptr;
    }
    if (want[e] != -1 && want[e] != v) {
      *impossible = true;
      return nullptr;
    }
    want[e] = v;
  }
  return [want = std::move(want)](Elem e, Elem v) { return want[e] == -1 || want[e] == v; };
}

}  // namespace

std::vector<RingHom> ring_hom_search(RingPtr src, RingPtr dst, const HomConstraints& c,
                                     const Caps& caps) {
  StructureView sv = ring_view(*src), dv = ring_view(*dst);
  GenPlan plan = make_gen_plan(sv);
  TableSearchOptions o;
  o.bijective_only = c.bijective_only;
  o.shuffle_seed = c.shuffle_seed;
  o.node_budget = caps.search_nodes;
  bool impossible = false;
  o.image_ok = pin_predicate(src->n, c.pin, &impossible);
  if (impossible) return {};
  auto tables = search_hom_tables(sv, dv, plan, o);
  std::vector<RingHom> res;
  res.reserve(tables.size());
  for (auto& t : tables) res.push_back(RingHom{src, dst, std::move(t)});
  return res;
}

std::vector<GroupHom> group_hom_search(GroupPtr src, GroupPtr dst, const HomConstraints& c,
                                       const Caps& caps) {
  StructureView sv = group_view(*src), dv = group_view(*dst);
  GenPlan plan = make_gen_plan(sv);
  TableSearchOptions o;
  o.bijective_only = c.bijective_only;
  o.shuffle_seed = c.shuffle_seed;
  o.node_budget = caps.search_nodes;
  bool impossible = false;
  o.image_ok = pin_predicate(src->n, c.pin, &impossible);
  if (impossible) return {};
  auto tables = search_hom_tables(sv, dv, plan, o);
  std::vector<GroupHom> res;
  res.reserve(tables.size());
  for (auto& t : tables) res.push_back(GroupHom{src, dst, std::move(t)});
  return res;
}

}  // namespace semitwist
