#pragma once

// Small finite fields F_{p^m} (p prime <= 7, 1 <= m <= 4) as quotients
// F_p[x]/(f) by the first irreducible monic f of degree m.
//
// Elements are integers in [0, p^m): base-p digit i is the coefficient of x^i.
// In particular 0..p-1 are the prime-field constants in every extension, so
// matrices over F_p can be used unchanged over F_{p^m}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace lequiv::ffcount {

using Elem = std::uint16_t;

class FiniteField {
 public:
  // Throws std::invalid_argument for p not a prime <= 7 or m outside 1..4.
  FiniteField(int p, int m = 1);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  int order() const { return order_; }
  // Monic modulus, coefficients low to high (size m + 1).
  std::vector<int> const& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws std::domain_error on zero

  // Arithmetic without the lookup tables; the tables are built from these.
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  // Reduces an integer into the prime field.
  Elem from_integer(long long v) const;

  std::string name() const;  // "F_4" etc.
  nlohmann::json describe() const;

 private:
  int p_;
  int m_;
  int order_;
  std::vector<int> modulus_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> inv_table_;
  std::vector<int> log_;
  std::vector<Elem> exp_;
  bool tabulated_ = false;
};

// Exhaustive trial division by every monic polynomial of degree <= m/2.
bool is_irreducible(std::vector<int> const& monic, int p);

// Lexicographically first monic irreducible of degree m over F_p, comparing
// coefficient vectors from x^{m-1} down to x^0.
std::vector<int> first_irreducible(int p, int m);

// Row-major matrix over a field.
struct FieldMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  FieldMatrix() = default;
  FieldMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  Elem& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  Elem operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  friend bool operator==(FieldMatrix const&, FieldMatrix const&) = default;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> reduce_rows(FieldMatrix& m, FiniteField const& f);
int rank(FieldMatrix m, FiniteField const& f);
// Basis of {x : m x = 0} as rows of the result.
FieldMatrix nullspace(FieldMatrix const& m, FiniteField const& f);

}  // namespace lequiv::ffcount
