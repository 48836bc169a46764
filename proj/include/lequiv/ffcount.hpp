#pragma once

// Brute-force point counting over small finite fields: Grassmannians, their
// hyperplane and linear sections, the singularity criterion for linear
// sections of Gr(2,5), and the incidence checks between a section of Gr(2,V)
// and the dual section of Gr(2,V^).
//
// These counts corroborate the motivic identities by evaluating classes at
// L = q; they are not a model of characteristic-zero geometry.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "json.hpp"
#include "lequiv/finite_field.hpp"
#include "lequiv/integer.hpp"

namespace lequiv::ffcount {

// A subspace of F^n stored by its reduced row echelon basis, so equal
// subspaces have equal representations.
class Subspace {
 public:
  Subspace(FieldMatrix spanning_rows, FiniteField const& f);

  int dimension() const { return basis_.rows; }
  int ambient_dimension() const { return basis_.cols; }
  FieldMatrix const& basis() const { return basis_; }
  friend bool operator==(Subspace const&, Subspace const&) = default;

 private:
  FieldMatrix basis_;
};

// Alternating matrix: skew-symmetric with zero diagonal.
class TwoForm {
 public:
  TwoForm(FieldMatrix matrix, FiniteField const& f);
  static TwoForm wedge(int i, int j, int n, FiniteField const& f);  // x_i ∧ x_j

  int dimension() const { return matrix_.rows; }
  FieldMatrix const& matrix() const { return matrix_; }
  bool is_zero() const;
  Elem upper(int i, int j) const { return matrix_(i, j); }

  // theta(u ∧ w) = u^T·M·w
  Elem evaluate(std::span<Elem const> u, std::span<Elem const> w,
                FiniteField const& f) const;

  friend bool operator==(TwoForm const&, TwoForm const&) = default;

 private:
  FieldMatrix matrix_;
};

TwoForm add(TwoForm const& a, TwoForm const& b, FiniteField const& f);
TwoForm scale(TwoForm const& a, Elem c, FiniteField const& f);
TwoForm combine(std::span<TwoForm const> forms, std::span<Elem const> coeffs,
                FiniteField const& f);

// ---------------------------------------------------------------------------
// Enumeration of Gr(k,n)(F).

// Pivot column sets of k x n echelon forms, in colex order.
std::vector<std::vector<int>> pivot_patterns(int k, int n);

// Calls visit(rows) once per k-dimensional subspace with the given pivots;
// rows is the k x n reduced echelon basis, row-major.
void for_each_subspace(FiniteField const& f, int n, std::vector<int> const& pivots,
                       std::function<void(std::span<Elem const>)> const& visit);
void for_each_subspace(FiniteField const& f, int k, int n,
                       std::function<void(std::span<Elem const>)> const& visit);

// Throws std::length_error beyond desk scale: field order > 16, n > 8, or
// more than 2^25 subspaces.
void check_enumeration_size(FiniteField const& f, int k, int n);

// Counts subspaces satisfying a predicate, split by pivot pattern over the
// given number of worker threads.  The result never depends on `workers`.
std::uint64_t count_subspaces(
    FiniteField const& f, int k, int n,
    std::function<bool(std::span<Elem const>)> const& predicate, int workers = 1);

Integer count_grassmannian(int k, int n, FiniteField const& f, int workers = 1);

Subspace form_kernel(TwoForm const& theta, FiniteField const& f);

// #{U in Gr(2,5)(F) : theta(U) = 0}.  Throws std::invalid_argument on theta = 0.
Integer count_hyperplane_section(TwoForm const& theta, FiniteField const& f,
                                 int workers = 1);

// ---------------------------------------------------------------------------
// Five-dimensional spaces of 2-forms on a 5-space.

// Forms with entries in the prime field F_p, usable over any F_{p^m}.
class FormSpace {
 public:
  // Throws std::invalid_argument unless there are five linearly independent
  // alternating 5x5 matrices.
  FormSpace(std::vector<TwoForm> forms, FiniteField const& prime_field);
  static FormSpace from_integers(std::vector<std::vector<std::vector<long long>>> const& mats,
                                 int p);

  int characteristic() const { return p_; }
  std::vector<TwoForm> const& forms() const { return forms_; }

 private:
  std::vector<TwoForm> forms_;
  int p_;
};

// Seeded random five-dimensional A over F_p.
FormSpace random_form_space(int p, std::uint64_t seed);

struct DualPoint {
  std::vector<Elem> coeffs;  // projective point of P(A), first nonzero = 1
  TwoForm form;
  Subspace kernel;
};

// X = Gr(2,V) ∩ P(A^perp): every U with theta(U) = 0 for all theta in A.
std::vector<Subspace> primal_points(FormSpace const& a, FiniteField const& f);
// Y = Gr(2,V^) ∩ P(A): every [theta] in P(A) with a 3-dimensional kernel.
std::vector<DualPoint> dual_points(FormSpace const& a, FiniteField const& f);

enum class Side { primal, dual };
// Dual points are returned as the 2-planes im(theta) ⊂ V^.
std::vector<Subspace> section_points(FormSpace const& a, FiniteField const& f, Side side);

struct SingularWitness {
  Subspace plane;            // U with theta(U) = 0 for all theta in A
  std::vector<Elem> coeffs;  // theta_0 in A with U ⊂ Ker(theta_0)
};

struct ScreenLevel {
  int degree = 0;
  nlohmann::json field;
  std::uint64_t section_points = 0;
  std::uint64_t singular_points = 0;
  std::vector<SingularWitness> witnesses;  // at most a few per level
};

// No witness up to max_ext does not prove smoothness over the closure.
struct SingularityReport {
  int p = 0;
  int max_ext = 0;
  std::vector<ScreenLevel> levels;
  bool singular_found() const;
  std::optional<int> first_singular_degree() const;
};

SingularityReport detect_singular(FormSpace const& a, int max_ext);

struct TorsorReport {
  std::uint64_t count_x = 0;
  std::uint64_t count_y = 0;
  bool counts_equal = false;
  bool pairing_ok = false;
  std::uint64_t pairs_checked = 0;
  bool reliable = false;  // smoothness screen up to degree 2 found nothing
  SingularityReport screen;
};

TorsorReport torsor_count_test(FormSpace const& a, FiniteField const& f);

// Two independent counts of the incidence {(U,[theta]) : theta(U) = 0} in
// Gr(2,5) × S: summing section sizes over theta in S, and summing fibre
// sizes over U in Gr(2,5).
struct IncidenceCount {
  Integer formula_side;
  Integer fibration_side;
  bool agree() const { return formula_side == fibration_side; }
};

// S = all of P(Λ^2 V^).  Field order 2 or 3 only.
IncidenceCount count_universal_hyperplane(FiniteField const& f);
// S = P(A).
IncidenceCount count_universal_hyperplane(FormSpace const& a, FiniteField const& f);
// S = P(span of the given linearly independent forms).
IncidenceCount count_universal_hyperplane(std::span<TwoForm const> s,
                                          FiniteField const& f);

// Random nonzero alternating 5x5 form of rank 2 or 4.
TwoForm random_form_of_rank(int form_rank, FiniteField const& f, std::mt19937_64& rng);

nlohmann::json to_json(FieldMatrix const& m);
nlohmann::json to_json(Subspace const& s);
nlohmann::json to_json(FormSpace const& a);
FormSpace form_space_from_json(nlohmann::json const& j, int p);
nlohmann::json to_json(SingularityReport const& r);
nlohmann::json to_json(TorsorReport const& r);

}  // namespace lequiv::ffcount
