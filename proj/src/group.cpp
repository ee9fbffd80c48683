#include "semitwist/group.hpp"

#include <numeric>

#include "semitwist/errors.hpp"

namespace semitwist {

GroupPtr check_group_tables(std::string label, int n, Elem id, std::vector<Elem> op,
                            std::vector<std::string> names, std::vector<Elem> inv) {
  if (n <= 0) throw validation_error(Violation::BadTable, "", "group needs at least one element");
  if (op.size() != size_t(n) * n)
    throw validation_error(Violation::BadTable, "", "operation table must be n*n");
  for (Elem v : op)
    if (v < 0 || v >= n)
      throw validation_error(Violation::BadTable, "", "operation table entry out of range");
  if (id < 0 || id >= n)
    throw validation_error(Violation::BadTable, "", "identity out of range");
  if (names.empty()) {
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if ((int)names.size() != n)
    throw validation_error(Violation::BadTable, "", "name list size mismatch");

  auto g = std::make_shared<FiniteGroup>();
  g->label = std::move(label);
  g->n = n;
  g->id = id;
  g->op_table = std::move(op);
  g->names = std::move(names);
  const FiniteGroup& G = *g;

  for (Elem a = 0; a < n; ++a)
    if (G.op(id, a) != a || G.op(a, id) != a)
      throw validation_error(Violation::NoIdentity, "(a=" + G.name(a) + ")",
                             "identity is not two-sided");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
          throw validation_error(
              Violation::NotAssociative,
              "(a=" + G.name(a) + ", b=" + G.name(b) + ", c=" + G.name(c) + ")",
              "group operation not associative");

  g->inv_table.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (G.op(a, b) == id && G.op(b, a) == id) {
        g->inv_table[a] = b;
        break;
      }
    if (g->inv_table[a] < 0)
      throw validation_error(Violation::BadInverse, "(a=" + G.name(a) + ")", "no two-sided inverse");
  }
  if (!inv.empty() && inv != g->inv_table)
    throw validation_error(Violation::BadInverse, "", "supplied inverse table disagrees with op");

  return g;
}

std::vector<long long> FiniteAbelianGroup::decode(Elem e) const {
  std::vector<long long> t(factors.size());
  long long v = e;
  for (size_t i = factors.size(); i-- > 0;) {
    t[i] = v % factors[i];
    v /= factors[i];
  }
  return t;
}

Elem FiniteAbelianGroup::encode(const std::vector<long long>& tuple) const {
  long long v = 0;
  for (size_t i = 0; i < factors.size(); ++i) v = v * factors[i] + tuple[i];
  return Elem(v);
}

Elem FiniteAbelianGroup::add(Elem a, Elem b) const {
  auto ta = decode(a), tb = decode(b);
  for (size_t i = 0; i < factors.size(); ++i) ta[i] = (ta[i] + tb[i]) % factors[i];
  return encode(ta);
}

Elem FiniteAbelianGroup::neg(Elem a) const {
  auto t = decode(a);
  for (size_t i = 0; i < factors.size(); ++i) t[i] = (factors[i] - t[i]) % factors[i];
  return encode(t);
}

Elem FiniteAbelianGroup::scale(long long k, Elem a) const {
  auto t = decode(a);
  for (size_t i = 0; i < factors.size(); ++i) t[i] = ((t[i] * k) % factors[i] + factors[i]) % factors[i];
  return encode(t);
}

std::string FiniteAbelianGroup::name(Elem e) const {
  auto t = decode(e);
  if (t.size() == 1) return std::to_string(t[0]);
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::string FiniteAbelianGroup::label() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += "Z/" + std::to_string(factors[i]);
  }
  return s;
}

FiniteAbelianGroup make_abelian_group(std::vector<long long> factors, const Caps& caps) {
  if (factors.empty())
    throw validation_error(Violation::NotInvariantFactors, "", "need at least one factor");
  for (long long f : factors)
    if (f < 1)
      throw validation_error(Violation::NotInvariantFactors, "", "factors must be positive");
  for (size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i + 1] % factors[i] != 0)
      throw validation_error(Violation::NotInvariantFactors,
                             "(" + std::to_string(factors[i]) + "," + std::to_string(factors[i + 1]) + ")",
                             "invariant factors must form a divisibility chain");
  FiniteAbelianGroup m;
  m.factors = std::move(factors);
  m.size = 1;
  for (long long f : m.factors) {
    m.size *= f;
    if (m.size > caps.module) throw cap_exceeded("module", caps.module, m.size);
  }
  return m;
}

GroupPtr to_group(const FiniteAbelianGroup& m) {
  int n = int(m.size);
  std::vector<Elem> op(size_t(n) * n);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = m.name(a);
    for (Elem b = 0; b < n; ++b) op[size_t(a) * n + b] = m.add(a, b);
  }
  return check_group_tables(m.label(), n, 0, std::move(op), std::move(names));
}

}  // namespace semitwist
