#pragma once

#include <string>
#include <vector>

#include "semitwist/semilin.hpp"
#include "semitwist/twist.hpp"

namespace semitwist {

/// Hom_{R/Ring}(R_theta[G], S): the complete, duplicate-free list of ring homs
/// under R out of the twisted group ring, canonically sorted by value table.
struct HomSetUnder {
  CosliceObject target;
  std::vector<RingHom> homs;  // src = the materialized twisted ring
};

/// Hom_{Grp/Aut(R)}(G, semi_R(S)): group homs commuting with the projections
/// to Aut(R), canonically sorted by value table.
struct HomSetOver {
  std::vector<GroupHom> homs;  // dst = semi.group
};

/// The bijection: f -> (g -> (f(1_R g), theta_g)). Membership of every image
/// pair and the homomorphism property are re-verified; a failure would
/// contradict the construction and throws std::logic_error.
GroupHom pi_map(const TwistedGroupRing& tw, const SemiGroup& semi, const RingHom& f);

/// The inverse: alpha -> (sum r_g g -> sum chi(r_g) * pi(alpha(g))). The
/// result is re-validated exhaustively as a ring hom under R.
RingHom pi_inverse_map(const TwistedGroupRing& tw, const SemiGroup& semi, const GroupHom& alpha);

/// Ring-side hom enumeration. A hom under R is determined by its values on
/// the elements 1_R*g, and g -> h(1_R g) is a group hom into the units of S;
/// the search backtracks over unit assignments on a generating set of G and
/// keeps exactly the extensions that validate as ring homs.
HomSetUnder enumerate_homs_under(const TwistedGroupRing& tw, const CosliceObject& target,
                                 const Caps& caps = {});

/// Group-side hom enumeration, fiber-constrained: alpha(g) must lie in the
/// to_aut fiber over theta_g.
HomSetOver enumerate_homs_over(const GroupAction& action, const SemiGroup& semi,
                               const Caps& caps = {});

struct BijectionReport {
  long long n_under = 0;
  long long n_over = 0;
  bool counts_equal = false;
  bool injective = false;
  bool surjective = false;
  bool round_trip_under = false;  // pi_inverse(pi(f)) == f for every f
  bool round_trip_over = false;   // pi(pi_inverse(a)) == a for every a
  bool unit_hom_valid = false;    // g -> (1_R g, theta_g) lands in semi_R(R_theta[G])
  std::vector<std::string> correspondence;
  std::string witness;

  bool pass() const {
    return counts_equal && injective && surjective && round_trip_under && round_trip_over &&
           unit_hom_valid;
  }
};

struct BijectionData {
  TwistedGroupRing tw;
  SemiGroup semi;
  HomSetUnder under;
  HomSetOver over;
  BijectionReport report;
};

BijectionData verify_bijection_data(const GroupAction& action, const CosliceObject& target,
                                    const Caps& caps = {});
BijectionReport verify_bijection(const GroupAction& action, const CosliceObject& target,
                                 const Caps& caps = {});

/// Naturality of the bijection on one square pair: j a slice morphism,
/// h a coslice morphism, mu: R_theta[G] -> S and lambda: R_psi[K] -> T under
/// R. Evaluates both squares exhaustively, asserts the iff, and re-checks
/// that each square's commutativity is equivalent to agreement on the
/// elements 1_R*g alone.
struct NaturalityReport {
  bool left_commutes = false;
  bool right_commutes = false;
  bool monomials_agree = false;  // h(mu(1_R g)) == lambda(1_R j(g)) for all g
  bool iff_holds = false;
  bool reduction_holds = false;
  std::string witness;

  bool pass() const { return iff_holds && reduction_holds; }
};

NaturalityReport verify_naturality(const SliceGroupMorphism& j, const CosliceRingMorphism& h,
                                   const RingHom& mu, const RingHom& lambda,
                                   const Caps& caps = {});

/// The modules corollary: with S = End(M) and chi the module structure, the
/// extensions of the R-module structure to R_theta[G] correspond bijectively
/// to the semilinear G-actions compatible with theta.
struct CorollaryReport {
  BijectionReport bijection;
  long long n_extensions = 0;
  long long n_actions = 0;
  std::vector<std::string> correspondence;

  bool pass() const { return bijection.pass(); }
};

CorollaryReport verify_modules_corollary(const GroupAction& action, const ModuleStructure& m,
                                         const Caps& caps = {});

}  // namespace semitwist
