#pragma once

// Even integral lattices of rank 2 and 4 with exact arithmetic, centred on
// the rank-two lattices Lambda_{t,d} with Gram matrix ((2d, t), (t, 0)):
// discriminant forms, isotropic lines, isomorphism, genus and isometries.

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lequiv/int_matrix.hpp"
#include "lequiv/integer.hpp"

namespace lequiv::lattice {

// Symmetric, even, nondegenerate integral Gram matrix of rank 2 or 4.
class GramMatrix {
 public:
  // Throws std::invalid_argument on any violated invariant.
  explicit GramMatrix(IntMatrix entries);

  IntMatrix const& entries() const { return entries_; }
  int rank() const { return entries_.rows(); }
  Integer determinant() const { return entries_.determinant(); }
  Integer pairing(std::vector<Integer> const& x,
                  std::vector<Integer> const& y) const;

  friend bool operator==(GramMatrix const&, GramMatrix const&) = default;

 private:
  IntMatrix entries_;
};

// Discriminant group of an even lattice with its Q/2Z-valued quadratic form.
// Generator i has order factors[i]; values(i,i) = q(g_i) mod 2 and
// values(i,j) = b(g_i, g_j) mod 1 for i != j.
struct FiniteQuadraticForm {
  std::vector<Integer> factors;
  std::vector<std::vector<Rational>> values;
  // Generators as rational vectors in the lattice basis.
  std::vector<std::vector<Rational>> generators;

  Integer order() const;
  // Elements are coefficient vectors with entry i taken mod factors[i].
  Rational q(std::vector<Integer> const& x) const;
  Rational b(std::vector<Integer> const& x, std::vector<Integer> const& y) const;
};

// Reduction into [0, m).
Rational reduce_mod(Rational const& r, Integer const& m);

GramMatrix lambda_gram(Integer const& t, Integer const& d);
GramMatrix hyperbolic_plane();
GramMatrix direct_sum(GramMatrix const& a, GramMatrix const& b);

struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(Signature const&, Signature const&) = default;
};
Signature signature(GramMatrix const& g);

FiniteQuadraticForm discriminant_form(GramMatrix const& g);
// Exhaustive search for an isometry between two finite quadratic forms.
bool is_isomorphic(FiniteQuadraticForm const& a, FiniteQuadraticForm const& b);

// Both primitive isotropic vectors of a rank-2 lattice with determinant -t^2,
// each normalised so its first nonzero coordinate is positive.
std::vector<std::vector<Integer>> isotropic_lines(GramMatrix const& g);

// t for a rank-2 lattice with determinant -t^2; throws std::domain_error if
// the determinant has another form.
Integer isotropic_modulus(GramMatrix const& g);

// For each isotropic line e, complete to a basis (e, f) with e·f = t; the
// residue of f^2/2 mod t does not depend on the choice of f, and the lattice
// is Lambda_{t, residue}.  Returned sorted.
std::vector<Integer> canonical_residues(GramMatrix const& g);

bool is_isomorphic(GramMatrix const& g1, GramMatrix const& g2);

// M with M^T·g2·M = g1, i.e. the columns of M are the images of g1's basis
// written in g2's basis.
std::optional<IntMatrix> find_isomorphism(GramMatrix const& g1,
                                          GramMatrix const& g2);

// All M with M^T·g·M = g.  Every isometry permutes the two isotropic lines
// up to sign, so the group is found among eight candidates.
std::vector<IntMatrix> isometry_group(GramMatrix const& g);

bool same_genus(GramMatrix const& g1, GramMatrix const& g2);

bool is_isometry(IntMatrix const& m, GramMatrix const& g);

// The classification of Lambda_{t,d} is only validated for odd prime t.
bool classification_validated(Integer const& t);

nlohmann::json to_json(GramMatrix const& g);
nlohmann::json to_json(FiniteQuadraticForm const& f);
FiniteQuadraticForm finite_form_from_json(nlohmann::json const& j);

}  // namespace lequiv::lattice
