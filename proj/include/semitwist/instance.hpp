#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitwist/adjunction.hpp"

namespace semitwist {

// Declarative instance files: one directive per line, '#' comments. The full
// grammar is documented in docs/instance-format.md.

struct RingSpec {
  enum class Kind { Zmod, Gf, Product, Matrix, Endo, Tables };
  Kind kind = Kind::Zmod;
  long long n = 0;  // zmod modulus, matrix dimension, explicit-table size
  long long p = 0;  // gf / matrix characteristic
  std::vector<long long> coeffs;   // gf modulus or endo invariant factors
  std::vector<RingSpec> operands;  // product
  Elem zero = 0, one = 0;
  std::vector<Elem> add, mul;  // explicit tables
};

struct GroupSpec {
  enum class Kind { Cyclic, Symmetric, Product, Tables };
  Kind kind = Kind::Cyclic;
  long long n = 0;
  std::vector<GroupSpec> operands;
  Elem id = 0;
  std::vector<Elem> op;
};

struct ActionSpec {
  enum class Kind { Trivial, Gens, Table };
  Kind kind = Kind::Trivial;
  std::vector<std::pair<Elem, int>> gens;  // group element -> automorphism index
  std::vector<int> table;
};

struct ModuleSpec {
  std::vector<long long> factors;
  bool chi_regular = true;
  std::vector<Elem> chi_ids;  // canonical endomorphism ids, one per ring element
};

enum class TargetKind { Auto, Self, Twist, Module };

enum class CheckKind {
  RingAxioms,
  SemiGroupCheck,
  Bijection,
  Naturality,
  FunctorLaws,
  ModulesCorollary,
  Oracles,
  All,
};

struct CheckSpec {
  CheckKind kind = CheckKind::All;
  std::optional<long long> expect;
};

struct ParsedInstance {
  RingSpec ring;
  GroupSpec group;
  ActionSpec action;
  std::optional<ModuleSpec> module;
  TargetKind target = TargetKind::Auto;
  std::vector<CheckSpec> checks;
  std::string source_path;
};

ParsedInstance parse_instance_text(const std::string& text, const std::string& name);
ParsedInstance parse_instance_file(const std::string& path);

/// Parses a ring recipe from loose tokens (the `aut list` command line).
RingSpec parse_ring_recipe_tokens(const std::vector<std::string>& tokens);

RingPtr build_ring(const RingSpec& spec, const Caps& caps = {});
GroupPtr build_group(const GroupSpec& spec, const Caps& caps = {});

struct BuiltInstance {
  RingPtr ring;
  GroupPtr group;
  AutPtr aut;
  GroupAction action;
  std::optional<ModuleStructure> module;
  TargetKind target = TargetKind::Auto;
  std::string digest;
};

BuiltInstance build_instance(const ParsedInstance& pi, const Caps& caps = {});

/// The coslice object the instance's checks run against: the module structure
/// when requested (or present, for Auto), otherwise the twisted group ring
/// itself via its structure map.
CosliceObject resolve_target(const BuiltInstance& bi, const TwistedGroupRing& tw);

}  // namespace semitwist
