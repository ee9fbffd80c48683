#pragma once

namespace semitwist {

/// Size limits for every enumeration-heavy operation. Defaults keep all
/// instances desk-scale; the CLI overrides individual entries via
/// `--caps name=value`.
struct Caps {
  long long ring = 256;               // max |R| for a table-backed ring
  long long group = 64;               // max |G|
  long long module = 64;              // max |M| for abelian groups
  long long twist = 65536;            // max |R|^|G| for a twisted group ring
  long long materialize = 256;        // max |R|^|G| for full-table realization
  long long search_nodes = 1000000;   // hom-search frontier budget
};

}  // namespace semitwist
