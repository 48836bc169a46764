#pragma once

// Extended Neron-Severi lattice N = U ⊕ Lambda_{t,d} in the ordered basis
// (e1, e2, H, F) with e1^2 = e2^2 = 0 and e1·e2 = -1, Jacobian Neron-Severi
// lattices as v^perp / v for v = F + k·e2, and the discriminant-group
// obstruction for Jac^2 of index-five elliptic K3 surfaces.

#include <string>
#include <vector>

#include "json.hpp"
#include "lequiv/int_matrix.hpp"
#include "lequiv/lattice.hpp"

namespace lequiv::mukai {

enum BasisIndex { kE1 = 0, kE2 = 1, kH = 2, kF = 3 };

struct ExtendedLattice {
  lattice::GramMatrix gram;
  Integer t;
  Integer d;
};

ExtendedLattice extended_gram(Integer const& t, Integer const& d);

using MukaiVector = std::vector<Integer>;

MukaiVector jacobian_mukai_vector(Integer const& k);  // F + k·e2

struct JacobianLattice {
  MukaiVector v;
  IntMatrix perp_basis;      // 4 x 3, columns span v^perp
  IntMatrix quotient_basis;  // 4 x 2, columns project to a basis of v^perp / v
  lattice::GramMatrix gram;  // induced form on v^perp / v
};

// Throws std::invalid_argument unless gcd(t, k) = 1 and t > 0.
JacobianLattice jacobian_lattice(Integer const& t, Integer const& d,
                                 Integer const& k);
lattice::GramMatrix jacobian_ns(Integer const& t, Integer const& d,
                                Integer const& k);

// e1 -> 2e2 + F, e2 -> -2e1 - H, H -> 2H + 5e1, F -> -2F - 5e2 on
// U ⊕ Lambda_{5,0}; columns are images.  Throws std::logic_error if the
// matrix fails to be an isometry.
IntMatrix g0_isometry();

// Block isometry diag(u_part, ns_part) of U ⊕ NS.
IntMatrix extend_isometry(IntMatrix const& u_part, IntMatrix const& ns_part);

// Action on the discriminant group (Z/t)^2 generated by H/t and F/t; column j
// holds the image of generator j, entries in [0, t).  Requires t | d.
IntMatrix discriminant_action(IntMatrix const& m, ExtendedLattice const& lat);

// The four admissible actions ±I, ±swap mod 5 coming from O(NS) when d = 0.
std::vector<IntMatrix> allowed_discriminant_actions();

enum class Verdict { isomorphic, not_isomorphic, not_isomorphic_if_very_general };
std::string to_string(Verdict v);

struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

struct VerdictReport {
  int d = 0;
  Verdict verdict = Verdict::isomorphic;
  // Hodge isometries of the transcendental lattice are ±1; an assumption for
  // very general X, never computed here.
  bool very_general_assumed = false;
  std::vector<Check> checks;
  nlohmann::json evidence;

  bool all_checks_pass() const;
};

// Whether X and Jac^2(X) agree for an elliptic K3 with NS(X) = Lambda_{5,d}.
// d is taken mod 5.
VerdictReport jac2_isomorphism_verdict(Integer const& d);

nlohmann::json to_json(VerdictReport const& r);

}  // namespace lequiv::mukai
