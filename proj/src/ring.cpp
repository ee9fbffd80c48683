#include "semitwist/ring.hpp"

#include "semitwist/errors.hpp"

namespace semitwist {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::NotAbelianAddition: return "NotAbelianAddition";
    case Violation::NotAssociative: return "NotAssociative";
    case Violation::NotDistributive: return "NotDistributive";
    case Violation::NoIdentity: return "NoIdentity";
    case Violation::BadInverse: return "BadInverse";
    case Violation::BadTable: return "BadTable";
    case Violation::NotAHomomorphism: return "NotAHomomorphism";
    case Violation::UnknownAutomorphism: return "UnknownAutomorphism";
    case Violation::NotOverAut: return "NotOverAut";
    case Violation::NotUnderR: return "NotUnderR";
    case Violation::NotInvariantFactors: return "NotInvariantFactors";
    case Violation::BadRecipe: return "BadRecipe";
  }
  return "Unknown";
}

namespace {

std::string w1(const FiniteRing& r, Elem a) { return "(a=" + r.name(a) + ")"; }

std::string w2(const FiniteRing& r, Elem a, Elem b) {
  return "(a=" + r.name(a) + ", b=" + r.name(b) + ")";
}

std::string w3(const FiniteRing& r, Elem a, Elem b, Elem c) {
  return "(a=" + r.name(a) + ", b=" + r.name(b) + ", c=" + r.name(c) + ")";
}

}  // namespace

RingPtr check_ring_tables(std::string label, int n, Elem zero, Elem one, std::vector<Elem> add,
                          std::vector<Elem> mul, std::vector<std::string> names) {
  if (n <= 0)
    throw validation_error(Violation::BadTable, "", "ring needs at least one element");
  size_t nn = size_t(n) * n;
  if (add.size() != nn || mul.size() != nn)
    throw validation_error(Violation::BadTable, "",
                           "tables must be square over the same index set (expected " +
                               std::to_string(nn) + " entries)");
  for (Elem v : add)
    if (v < 0 || v >= n)
      throw validation_error(Violation::BadTable, "", "addition table entry out of range");
  for (Elem v : mul)
    if (v < 0 || v >= n)
      throw validation_error(Violation::BadTable, "", "multiplication table entry out of range");
  if (zero < 0 || zero >= n || one < 0 || one >= n)
    throw validation_error(Violation::BadTable, "", "zero/one out of range");

  if (names.empty()) {
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if ((int)names.size() != n)
    throw validation_error(Violation::BadTable, "", "name list size mismatch");

  auto r = std::make_shared<FiniteRing>();
  r->label = std::move(label);
  r->n = n;
  r->zero = zero;
  r->one = one;
  r->add_table = std::move(add);
  r->mul_table = std::move(mul);
  r->names = std::move(names);
  const FiniteRing& R = *r;

  // (elements, add, zero) is an abelian group
  for (Elem a = 0; a < n; ++a) {
    if (R.add(zero, a) != a || R.add(a, zero) != a)
      throw validation_error(Violation::NotAbelianAddition, w1(R, a), "zero is not additive identity");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (R.add(a, b) != R.add(b, a))
        throw validation_error(Violation::NotAbelianAddition, w2(R, a, b), "addition not commutative");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
          throw validation_error(Violation::NotAbelianAddition, w3(R, a, b, c),
                                 "addition not associative");
  r->neg_table.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (R.add(a, b) == zero) {
        r->neg_table[a] = b;
        break;
      }
    if (r->neg_table[a] < 0)
      throw validation_error(Violation::NotAbelianAddition, w1(R, a), "no additive inverse");
  }

  // one is a two-sided multiplicative identity
  for (Elem a = 0; a < n; ++a)
    if (R.mul(one, a) != a || R.mul(a, one) != a)
      throw validation_error(Violation::NoIdentity, w1(R, a), "one is not a two-sided identity");

  // multiplication associative
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
          throw validation_error(Violation::NotAssociative, w3(R, a, b, c),
                                 "multiplication not associative");

  // distributivity on both sides
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
          throw validation_error(Violation::NotDistributive, w3(R, a, b, c),
                                 "left distributivity fails");
        if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
          throw validation_error(Violation::NotDistributive, w3(R, a, b, c),
                                 "right distributivity fails");
      }

  return r;
}

UnitGroup enumerate_units(const FiniteRing& r) {
  UnitGroup u;
  u.inv_of.assign(r.n, -1);
  for (Elem s = 0; s < r.n; ++s) {
    for (Elem t = 0; t < r.n; ++t) {
      if (r.mul(s, t) == r.one && r.mul(t, s) == r.one) {
        u.inv_of[s] = t;
        u.units.push_back(s);
        break;
      }
    }
  }
  return u;
}

}  // namespace semitwist
