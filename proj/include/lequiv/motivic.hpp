#pragma once

// Arithmetic in the image of the Grothendieck ring of varieties generated by
// the Lefschetz class L, extended by two formal curve classes X and Y.
//
// An expression is  s(L) + x(L)·X + y(L)·Y  with integer polynomials s, x, y.
// X and Y only ever appear linearly: the structure is a free Z[L]-module of
// rank three, not a ring on the symbols.  Multiplying two expressions that
// both carry a symbol throws SymbolProductError.

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lequiv/integer.hpp"

namespace lequiv::motivic {

// Dense polynomial in L, coefficients little-endian, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long long> coefficients);
  explicit Polynomial(std::vector<Integer> coefficients);

  static Polynomial constant(Integer c);
  static Polynomial monomial(int degree, Integer c = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Integer coefficient(int i) const;
  std::vector<Integer> const& coefficients() const { return coefficients_; }

  Integer evaluate(Integer const& at) const;
  bool is_palindromic() const;

  Polynomial& operator+=(Polynomial const& o);
  Polynomial& operator-=(Polynomial const& o);
  friend Polynomial operator+(Polynomial a, Polynomial const& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, Polynomial const& b) { return a -= b; }
  friend Polynomial operator-(Polynomial const& a);
  friend Polynomial operator*(Polynomial const& a, Polynomial const& b);
  friend bool operator==(Polynomial const&, Polynomial const&) = default;

  // "L^9 + 2L^8 + ... + 1"
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coefficients_;
};

class SymbolProductError : public std::domain_error {
 public:
  SymbolProductError()
      : std::domain_error("product of two formal curve classes is undefined") {}
};

class MotivicExpression {
 public:
  MotivicExpression() = default;
  MotivicExpression(Polynomial scalar, Polynomial x = {}, Polynomial y = {});

  static MotivicExpression lefschetz_power(int n);
  static MotivicExpression symbol_x();
  static MotivicExpression symbol_y();

  Polynomial const& scalar_part() const { return scalar_; }
  Polynomial const& x_part() const { return x_; }
  Polynomial const& y_part() const { return y_; }

  bool is_zero() const;
  bool has_symbols() const { return !x_.is_zero() || !y_.is_zero(); }

  // Replaces X and Y by scalar classes.
  MotivicExpression substitute(Polynomial const& x_value,
                               Polynomial const& y_value) const;
  // Value at L = q.  Throws std::domain_error if a symbol survives.
  Integer evaluate(Integer const& q) const;
  // Value at L = q with the symbols replaced by point counts.
  Integer evaluate(Integer const& q, Integer const& x_count,
                   Integer const& y_count) const;

  MotivicExpression& operator+=(MotivicExpression const& o);
  MotivicExpression& operator-=(MotivicExpression const& o);
  friend MotivicExpression operator+(MotivicExpression a,
                                     MotivicExpression const& b) {
    return a += b;
  }
  friend MotivicExpression operator-(MotivicExpression a,
                                     MotivicExpression const& b) {
    return a -= b;
  }
  friend MotivicExpression operator-(MotivicExpression const& a);
  friend MotivicExpression operator*(MotivicExpression const& a,
                                     MotivicExpression const& b);
  friend bool operator==(MotivicExpression const&,
                         MotivicExpression const&) = default;

  std::string to_string() const;

 private:
  Polynomial scalar_;
  Polynomial x_;
  Polynomial y_;
};

// [P^n] = 1 + L + ... + L^n.
MotivicExpression class_projective_space(int n);

// [Gr(k,n)] as a sum over Young diagrams in the k x (n-k) box.
MotivicExpression class_grassmannian(int k, int n);

// Class of a hyperplane section of Gr(2,5) by a nonzero 2-form whose kernel
// has dimension 1 (smooth section) or 3 (singular section).
MotivicExpression class_hyperplane_section(int kernel_dim);

// [H_S] = [S]·(smooth section) + L^4·[S ∩ Gr(2,V^)].
MotivicExpression class_universal_hyperplane(MotivicExpression const& s_class,
                                             MotivicExpression const& s_cap_dual);

struct DualityReport {
  MotivicExpression lhs;  // [P^4]·(smooth section) + L^4·Y
  MotivicExpression rhs;  // [Gr(2,5)]·[P^3] + L^4·X
  MotivicExpression difference;
  bool identity_holds = false;
};

// Computes the class of the universal hyperplane section over P(A) in two
// ways and compares them.
DualityReport verify_quintic_duality();

nlohmann::json to_json(Polynomial const& p);
nlohmann::json to_json(MotivicExpression const& e);
Polynomial polynomial_from_json(nlohmann::json const& j);
MotivicExpression expression_from_json(nlohmann::json const& j);

}  // namespace lequiv::motivic
