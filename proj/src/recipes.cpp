#include "semitwist/recipes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "semitwist/errors.hpp"

namespace semitwist {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_ring_cap(long long size, const Caps& caps) {
  if (size > caps.ring) throw cap_exceeded("ring", caps.ring, size);
}

// ---- polynomial arithmetic over Z/p, little-endian coefficient vectors ----

using Poly = std::vector<long long>;

Poly poly_mul_mod(const Poly& a, const Poly& b, long long p, const Poly& modulus) {
  size_t d = modulus.size() - 1;  // monic, degree d
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (size_t i = prod.size(); i-- > d;) {
    long long c = prod[i] % p;
    if (c == 0) continue;
    // subtract c * x^(i-d) * modulus
    for (size_t k = 0; k <= d; ++k)
      prod[i - d + k] = ((prod[i - d + k] - c * modulus[k]) % p + p) % p;
  }
  prod.resize(d);
  return prod;
}

// remainder of a modulo b over Z/p; both little-endian, deg(b) >= 1
Poly poly_rem(Poly a, Poly b, long long p) {
  auto trim = [](Poly& q) {
    while (q.size() > 1 && q.back() == 0) q.pop_back();
  };
  for (auto& c : a) c = ((c % p) + p) % p;
  for (auto& c : b) c = ((c % p) + p) % p;
  trim(a);
  trim(b);
  long long inv = 1;
  for (long long t = 1; t < p; ++t)
    if ((b.back() * t) % p == 1) {
      inv = t;
      break;
    }
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    long long c = a.back() * inv % p;
    size_t shift = a.size() - b.size();
    for (size_t k = 0; k < b.size(); ++k)
      a[shift + k] = ((a[shift + k] - c * b[k]) % p + p) % p;
    trim(a);  // leading coefficient was eliminated, so the degree drops
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

// trial division by every monic polynomial of degree 1..deg/2
bool poly_irreducible(const Poly& modulus, long long p) {
  size_t d = modulus.size() - 1;
  for (size_t dd = 1; dd <= d / 2; ++dd) {
    long long count = 1;
    for (size_t i = 0; i < dd; ++i) count *= p;  // free low coefficients
    for (long long enc = 0; enc < count; ++enc) {
      Poly div(dd + 1, 0);
      long long v = enc;
      for (size_t i = 0; i < dd; ++i) {
        div[i] = v % p;
        v /= p;
      }
      div[dd] = 1;
      if (poly_is_zero(poly_rem(modulus, div, p))) return false;
    }
  }
  return true;
}

std::string poly_name(const Poly& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c[i]);
    } else {
      if (c[i] != 1) s += std::to_string(c[i]) + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

RingPtr ring_zmod(long long n, const Caps& caps) {
  if (n < 1) throw validation_error(Violation::BadRecipe, "", "zmod needs n >= 1");
  check_ring_cap(n, caps);
  int m = int(n);
  std::vector<Elem> add(size_t(m) * m), mul(size_t(m) * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      add[size_t(a) * m + b] = Elem((a + b) % n);
      mul[size_t(a) * m + b] = Elem((long long(a) * b) % n);
    }
  return check_ring_tables("Z/" + std::to_string(n), m, 0, m == 1 ? 0 : 1, std::move(add),
                           std::move(mul));
}

RingPtr ring_gf(long long p, const std::vector<long long>& modulus, const Caps& caps) {
  if (!is_prime(p)) throw validation_error(Violation::BadRecipe, "", "gf base must be prime");
  if (modulus.size() < 2)
    throw validation_error(Violation::BadRecipe, "", "gf modulus must have degree >= 1");
  Poly mod(modulus);
  for (auto& c : mod) c = ((c % p) + p) % p;
  if (mod.back() != 1)
    throw validation_error(Violation::BadRecipe, "", "gf modulus must be monic");
  if (!poly_irreducible(mod, p))
    throw validation_error(Violation::BadRecipe, poly_name(mod),
                           "gf modulus must be irreducible over Z/" + std::to_string(p));
  size_t d = mod.size() - 1;
  long long size = 1;
  for (size_t i = 0; i < d; ++i) {
    size *= p;
    check_ring_cap(size, caps);
  }
  int n = int(size);
  auto decode = [&](Elem e) {
    Poly c(d);
    long long v = e;
    for (size_t i = 0; i < d; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto encode = [&](const Poly& c) {
    long long v = 0;
    for (size_t i = d; i-- > 0;) v = v * p + (c[i] % p);
    return Elem(v);
  };
  std::vector<Elem> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    Poly pa = decode(a);
    names[a] = poly_name(pa);
    for (Elem b = 0; b < n; ++b) {
      Poly pb = decode(b);
      Poly s(d);
      for (size_t i = 0; i < d; ++i) s[i] = (pa[i] + pb[i]) % p;
      add[size_t(a) * n + b] = encode(s);
      mul[size_t(a) * n + b] = encode(poly_mul_mod(pa, pb, p, mod));
    }
  }
  return check_ring_tables("GF(" + std::to_string(size) + ")", n, 0, 1, std::move(add),
                           std::move(mul), std::move(names));
}

RingPtr ring_product(const std::vector<RingPtr>& operands, const Caps& caps) {
  if (operands.size() < 2)
    throw validation_error(Violation::BadRecipe, "", "product needs at least two operands");
  long long size = 1;
  for (const auto& r : operands) {
    size *= r->n;
    check_ring_cap(size, caps);
  }
  int n = int(size);
  auto decode = [&](Elem e) {
    std::vector<Elem> t(operands.size());
    long long v = e;
    for (size_t i = operands.size(); i-- > 0;) {
      t[i] = Elem(v % operands[i]->n);
      v /= operands[i]->n;
    }
    return t;
  };
  auto encode = [&](const std::vector<Elem>& t) {
    long long v = 0;
    for (size_t i = 0; i < operands.size(); ++i) v = v * operands[i]->n + t[i];
    return Elem(v);
  };
  std::vector<Elem> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> names(n);
  std::vector<Elem> zt(operands.size()), ot(operands.size());
  for (size_t i = 0; i < operands.size(); ++i) {
    zt[i] = operands[i]->zero;
    ot[i] = operands[i]->one;
  }
  for (Elem a = 0; a < n; ++a) {
    auto ta = decode(a);
    std::string nm = "(";
    for (size_t i = 0; i < operands.size(); ++i) {
      if (i) nm += ",";
      nm += operands[i]->name(ta[i]);
    }
    names[a] = nm + ")";
    for (Elem b = 0; b < n; ++b) {
      auto tb = decode(b);
      std::vector<Elem> s(operands.size()), m(operands.size());
      for (size_t i = 0; i < operands.size(); ++i) {
        s[i] = operands[i]->add(ta[i], tb[i]);
        m[i] = operands[i]->mul(ta[i], tb[i]);
      }
      add[size_t(a) * n + b] = encode(s);
      mul[size_t(a) * n + b] = encode(m);
    }
  }
  std::string label;
  for (size_t i = 0; i < operands.size(); ++i) {
    if (i) label += "x";
    label += operands[i]->label;
  }
  return check_ring_tables(std::move(label), n, encode(zt), encode(ot), std::move(add),
                           std::move(mul), std::move(names));
}

RingPtr ring_matrix(int dim, long long p, const Caps& caps) {
  if (dim < 1) throw validation_error(Violation::BadRecipe, "", "matrix dimension must be >= 1");
  if (!is_prime(p)) throw validation_error(Violation::BadRecipe, "", "matrix base must be prime");
  int k = dim * dim;
  long long size = 1;
  for (int i = 0; i < k; ++i) {
    size *= p;
    check_ring_cap(size, caps);
  }
  int n = int(size);
  auto decode = [&](Elem e) {
    std::vector<long long> m(k);
    long long v = e;
    for (int i = k; i-- > 0;) {
      m[i] = v % p;
      v /= p;
    }
    return m;  // row-major
  };
  auto encode = [&](const std::vector<long long>& m) {
    long long v = 0;
    for (int i = 0; i < k; ++i) v = v * p + (m[i] % p);
    return Elem(v);
  };
  std::vector<Elem> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> names(n);
  std::vector<long long> ident(k, 0);
  for (int i = 0; i < dim; ++i) ident[i * dim + i] = 1;
  for (Elem a = 0; a < n; ++a) {
    auto ma = decode(a);
    std::string nm = "[";
    for (int r = 0; r < dim; ++r) {
      if (r) nm += ";";
      for (int c = 0; c < dim; ++c) {
        if (c) nm += " ";
        nm += std::to_string(ma[r * dim + c]);
      }
    }
    names[a] = nm + "]";
    for (Elem b = 0; b < n; ++b) {
      auto mb = decode(b);
      std::vector<long long> s(k), m(k, 0);
      for (int i = 0; i < k; ++i) s[i] = (ma[i] + mb[i]) % p;
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
          long long acc = 0;
          for (int t = 0; t < dim; ++t) acc += ma[r * dim + t] * mb[t * dim + c];
          m[r * dim + c] = acc % p;
        }
      add[size_t(a) * n + b] = encode(s);
      mul[size_t(a) * n + b] = encode(m);
    }
  }
  return check_ring_tables("M" + std::to_string(dim) + "(Z/" + std::to_string(p) + ")", n, 0,
                           encode(ident), std::move(add), std::move(mul), std::move(names));
}

int EndomorphismRing::index_of(const std::vector<Elem>& table) const {
  auto it = std::lower_bound(tables.begin(), tables.end(), table);
  if (it == tables.end() || *it != table) return -1;
  return int(it - tables.begin());
}

EndomorphismRing endomorphism_ring(const FiniteAbelianGroup& m, const Caps& caps) {
  size_t k = m.factors.size();
  // an endo is fixed by generator images x_i with n_i * x_i = 0
  std::vector<std::vector<Elem>> choices(k);
  long long count = 1;
  for (size_t i = 0; i < k; ++i) {
    for (Elem x = 0; x < m.size; ++x)
      if (m.scale(m.factors[i], x) == 0) choices[i].push_back(x);
    count *= (long long)choices[i].size();
    if (count > caps.ring) throw cap_exceeded("ring", caps.ring, count);
  }

  std::vector<Elem> gens(k);
  for (size_t i = 0; i < k; ++i) {
    std::vector<long long> t(k, 0);
    t[i] = 1 % m.factors[i];
    gens[i] = m.encode(t);
  }

  std::vector<std::vector<Elem>> tables;
  tables.reserve(count);
  std::vector<size_t> odo(k, 0);
  while (true) {
    std::vector<Elem> table(m.size);
    for (Elem x = 0; x < m.size; ++x) {
      auto tx = m.decode(x);
      Elem acc = 0;
      for (size_t i = 0; i < k; ++i) acc = m.add(acc, m.scale(tx[i], choices[i][odo[i]]));
      table[x] = acc;
    }
    tables.push_back(std::move(table));
    size_t i = 0;
    for (; i < k; ++i) {
      if (++odo[i] < choices[i].size()) break;
      odo[i] = 0;
    }
    if (i == k) break;
  }
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());

  int n = int(tables.size());
  std::map<std::vector<Elem>, Elem> index;
  for (int i = 0; i < n; ++i) index[tables[i]] = i;

  std::vector<Elem> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> names(n);
  std::vector<Elem> zero_t(m.size, 0), id_t(m.size);
  std::iota(id_t.begin(), id_t.end(), 0);
  for (int a = 0; a < n; ++a) {
    std::string nm = "(";
    for (size_t i = 0; i < k; ++i) {
      if (i) nm += ",";
      nm += std::to_string(tables[a][gens[i]]);
    }
    names[a] = nm + ")";
    for (int b = 0; b < n; ++b) {
      std::vector<Elem> s(m.size), c(m.size);
      for (Elem x = 0; x < m.size; ++x) {
        s[x] = m.add(tables[a][x], tables[b][x]);
        c[x] = tables[a][tables[b][x]];  // (f*g)(x) = f(g(x))
      }
      auto its = index.find(s);
      auto itc = index.find(c);
      if (its == index.end() || itc == index.end())
        throw std::logic_error("endomorphism set not closed");
      add[size_t(a) * n + b] = its->second;
      mul[size_t(a) * n + b] = itc->second;
    }
  }
  EndomorphismRing er;
  er.m = m;
  er.tables = std::move(tables);
  er.ring = check_ring_tables("End(" + m.label() + ")", n, er.index_of(zero_t), er.index_of(id_t),
                              std::move(add), std::move(mul), std::move(names));
  return er;
}

GroupPtr group_cyclic(long long n, const Caps& caps) {
  if (n < 1) throw validation_error(Violation::BadRecipe, "", "cyclic needs n >= 1");
  if (n > caps.group) throw cap_exceeded("group", caps.group, n);
  int m = int(n);
  std::vector<Elem> op(size_t(m) * m);
  std::vector<std::string> names(m);
  for (Elem a = 0; a < m; ++a) {
    names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (Elem b = 0; b < m; ++b) op[size_t(a) * m + b] = Elem((a + b) % n);
  }
  return check_group_tables("C" + std::to_string(n), m, 0, std::move(op), std::move(names));
}

GroupPtr group_product(const std::vector<GroupPtr>& operands, const Caps& caps) {
  if (operands.size() < 2)
    throw validation_error(Violation::BadRecipe, "", "product needs at least two operands");
  long long size = 1;
  for (const auto& g : operands) {
    size *= g->n;
    if (size > caps.group) throw cap_exceeded("group", caps.group, size);
  }
  int n = int(size);
  auto decode = [&](Elem e) {
    std::vector<Elem> t(operands.size());
    long long v = e;
    for (size_t i = operands.size(); i-- > 0;) {
      t[i] = Elem(v % operands[i]->n);
      v /= operands[i]->n;
    }
    return t;
  };
  auto encode = [&](const std::vector<Elem>& t) {
    long long v = 0;
    for (size_t i = 0; i < operands.size(); ++i) v = v * operands[i]->n + t[i];
    return Elem(v);
  };
  std::vector<Elem> op(size_t(n) * n);
  std::vector<std::string> names(n);
  std::vector<Elem> idt(operands.size());
  for (size_t i = 0; i < operands.size(); ++i) idt[i] = operands[i]->id;
  for (Elem a = 0; a < n; ++a) {
    auto ta = decode(a);
    std::string nm = "(";
    for (size_t i = 0; i < operands.size(); ++i) {
      if (i) nm += ",";
      nm += operands[i]->name(ta[i]);
    }
    names[a] = nm + ")";
    for (Elem b = 0; b < n; ++b) {
      auto tb = decode(b);
      std::vector<Elem> t(operands.size());
      for (size_t i = 0; i < operands.size(); ++i) t[i] = operands[i]->op(ta[i], tb[i]);
      op[size_t(a) * n + b] = encode(t);
    }
  }
  std::string label;
  for (size_t i = 0; i < operands.size(); ++i) {
    if (i) label += "x";
    label += operands[i]->label;
  }
  return check_group_tables(std::move(label), n, encode(idt), std::move(op), std::move(names));
}

GroupPtr group_symmetric(int deg, const Caps& caps) {
  if (deg < 1 || deg > 5)
    throw validation_error(Violation::BadRecipe, "", "symmetric supports degrees 1..5");
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(deg);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  long long n = (long long)perms.size();
  if (n > caps.group) throw cap_exceeded("group", caps.group, n);

  std::map<std::vector<Elem>, Elem> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<Elem> op(size_t(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::string nm = "[";
    for (int i = 0; i < deg; ++i) {
      if (i) nm += " ";
      nm += std::to_string(perms[a][i]);
    }
    names[a] = nm + "]";
    for (int b = 0; b < n; ++b) {
      std::vector<Elem> comp(deg);
      for (int i = 0; i < deg; ++i) comp[i] = perms[a][perms[b][i]];  // a after b
      op[size_t(a) * n + b] = index[comp];
    }
  }
  return check_group_tables("S" + std::to_string(deg), int(n), 0, std::move(op), std::move(names));
}

}  // namespace semitwist
