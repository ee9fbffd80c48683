#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semitwist/caps.hpp"
#include "semitwist/ring.hpp"

namespace semitwist {

/// A finite group stored as a dense operation table. Validated exhaustively
/// on construction; immutable afterwards.
struct FiniteGroup {
  std::string label;
  int n = 0;
  Elem id = 0;
  std::vector<Elem> op_table;   // n*n, row-major
  std::vector<Elem> inv_table;  // derived (or checked, if supplied)
  std::vector<std::string> names;

  Elem op(Elem a, Elem b) const { return op_table[size_t(a) * n + b]; }
  Elem inv(Elem a) const { return inv_table[a]; }
  const std::string& name(Elem a) const { return names[a]; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates group axioms exhaustively. When `inv` is empty the inverse table
/// is derived; otherwise it is checked against the operation table.
GroupPtr check_group_tables(std::string label, int n, Elem id, std::vector<Elem> op,
                            std::vector<std::string> names = {}, std::vector<Elem> inv = {});

/// A finite abelian group in invariant-factor form (n1 | n2 | ...). Elements
/// are residue tuples, encoded lexicographically: the first factor is the
/// most significant digit.
struct FiniteAbelianGroup {
  std::vector<long long> factors;
  long long size = 1;

  std::vector<long long> decode(Elem e) const;
  Elem encode(const std::vector<long long>& tuple) const;
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem scale(long long k, Elem a) const;  // k * a
  std::string name(Elem e) const;
  std::string label() const;
};

FiniteAbelianGroup make_abelian_group(std::vector<long long> factors, const Caps& caps = {});

/// Realizes the abelian group as a FiniteGroup (same element order).
GroupPtr to_group(const FiniteAbelianGroup& m);

}  // namespace semitwist
