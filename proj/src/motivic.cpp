#include "lequiv/motivic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lequiv/json_util.hpp"

namespace lequiv::motivic {

Polynomial::Polynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coefficients_.emplace_back(c);
  normalize();
}

Polynomial::Polynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

Polynomial Polynomial::constant(Integer c) {
  return Polynomial(std::vector<Integer>{std::move(c)});
}

Polynomial Polynomial::monomial(int degree, Integer c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Integer> coefficients(degree + 1);
  coefficients[degree] = std::move(c);
  return Polynomial(std::move(coefficients));
}

void Polynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Integer Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[i];
}

Integer Polynomial::evaluate(Integer const& at) const {
  Integer value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * at + *it;
  }
  return value;
}

bool Polynomial::is_palindromic() const {
  return std::equal(coefficients_.begin(), coefficients_.end(),
                    coefficients_.rbegin());
}

Polynomial& Polynomial::operator+=(Polynomial const& o) {
  if (o.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(o.coefficients_.size());
  }
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) {
    coefficients_[i] += o.coefficients_[i];
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(Polynomial const& o) {
  return *this += -o;
}

Polynomial operator-(Polynomial const& a) {
  Polynomial r = a;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

Polynomial operator*(Polynomial const& a, Polynomial const& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Integer c = coefficients_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    Integer m = abs(c);
    if (i == 0) {
      out << m;
    } else {
      if (m != 1) out << m;
      out << "L";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

MotivicExpression::MotivicExpression(Polynomial scalar, Polynomial x,
                                     Polynomial y)
    : scalar_(std::move(scalar)), x_(std::move(x)), y_(std::move(y)) {}

MotivicExpression MotivicExpression::lefschetz_power(int n) {
  return MotivicExpression(Polynomial::monomial(n));
}

MotivicExpression MotivicExpression::symbol_x() {
  return MotivicExpression({}, Polynomial{1}, {});
}

MotivicExpression MotivicExpression::symbol_y() {
  return MotivicExpression({}, {}, Polynomial{1});
}

bool MotivicExpression::is_zero() const {
  return scalar_.is_zero() && x_.is_zero() && y_.is_zero();
}

MotivicExpression MotivicExpression::substitute(Polynomial const& x_value,
                                                Polynomial const& y_value) const {
  return MotivicExpression(scalar_ + x_ * x_value + y_ * y_value);
}

Integer MotivicExpression::evaluate(Integer const& q) const {
  if (has_symbols()) {
    throw std::domain_error("cannot evaluate an expression containing X or Y");
  }
  return scalar_.evaluate(q);
}

Integer MotivicExpression::evaluate(Integer const& q, Integer const& x_count,
                                    Integer const& y_count) const {
  return scalar_.evaluate(q) + x_.evaluate(q) * x_count +
         y_.evaluate(q) * y_count;
}

MotivicExpression& MotivicExpression::operator+=(MotivicExpression const& o) {
  scalar_ += o.scalar_;
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

MotivicExpression& MotivicExpression::operator-=(MotivicExpression const& o) {
  scalar_ -= o.scalar_;
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

MotivicExpression operator-(MotivicExpression const& a) {
  return MotivicExpression(-a.scalar_, -a.x_, -a.y_);
}

MotivicExpression operator*(MotivicExpression const& a,
                            MotivicExpression const& b) {
  if (a.has_symbols() && b.has_symbols()) throw SymbolProductError();
  return MotivicExpression(a.scalar_ * b.scalar_,
                           a.scalar_ * b.x_ + a.x_ * b.scalar_,
                           a.scalar_ * b.y_ + a.y_ * b.scalar_);
}

std::string MotivicExpression::to_string() const {
  std::string s;
  auto append = [&s](Polynomial const& p, char const* symbol) {
    if (p.is_zero()) return;
    if (!s.empty()) s += " + ";
    if (symbol == nullptr) {
      s += p.to_string();
    } else if (p == Polynomial{1}) {
      s += symbol;
    } else {
      s += "(" + p.to_string() + ")·" + symbol;
    }
  };
  append(scalar_, nullptr);
  append(x_, "X");
  append(y_, "Y");
  return s.empty() ? "0" : s;
}

MotivicExpression class_projective_space(int n) {
  if (n < 0) throw std::invalid_argument("projective space of negative dimension");
  return MotivicExpression(Polynomial(std::vector<Integer>(n + 1, 1)));
}

MotivicExpression class_grassmannian(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("Gr(k,n) needs 0 <= k <= n");
  int const width = n - k;
  int const cells = k * width;
  std::vector<Integer> coefficients(cells + 1);
  // Affine cells are indexed by weakly decreasing rows in the k x (n-k) box;
  // the cell of a diagram with |lambda| boxes has dimension cells - |lambda|.
  std::function<void(int, int, int)> walk = [&](int row, int max_part,
                                                int size) {
    if (row == k) {
      ++coefficients[cells - size];
      return;
    }
    for (int part = 0; part <= max_part; ++part) walk(row + 1, part, size + part);
  };
  walk(0, width, 0);
  return MotivicExpression(Polynomial(std::move(coefficients)));
}

MotivicExpression class_hyperplane_section(int kernel_dim) {
  auto const p = class_projective_space;
  if (kernel_dim == 1) {
    // U either meets the kernel K or not; (U+K)/K is an isotropic subspace of
    // the symplectic 4-space V/K, and LG(2,4) is a 3-dimensional quadric.
    MotivicExpression const lagrangian_grassmannian = p(3);
    return p(3) + (p(2) - p(1)) * lagrangian_grassmannian;
  }
  if (kernel_dim == 3) {
    // U either lies in K or meets it in a line.
    return p(2) + (p(3) - p(1)) * p(2);
  }
  throw std::invalid_argument(
      "a nonzero 2-form on a 5-space has kernel of dimension 1 or 3");
}

MotivicExpression class_universal_hyperplane(MotivicExpression const& s_class,
                                             MotivicExpression const& s_cap_dual) {
  return s_class * class_hyperplane_section(1) +
         MotivicExpression::lefschetz_power(4) * s_cap_dual;
}

DualityReport verify_quintic_duality() {
  auto const l4 = MotivicExpression::lefschetz_power(4);
  DualityReport r;
  // Fibred over P(A): smooth sections, plus L^4 for each singular one (Y).
  r.lhs = class_universal_hyperplane(class_projective_space(4),
                                     MotivicExpression::symbol_y());
  // Fibred over Gr(2,5): P^3 fibres off X, P^4 = P^3 + L^4 over X.
  r.rhs = class_grassmannian(2, 5) * class_projective_space(3) +
          l4 * MotivicExpression::symbol_x();
  r.difference = r.lhs - r.rhs;
  r.identity_holds = r.lhs.scalar_part() == r.rhs.scalar_part();
  return r;
}

nlohmann::json to_json(Polynomial const& p) {
  auto arr = nlohmann::json::array();
  for (auto const& c : p.coefficients()) arr.push_back(integer_to_json(c));
  return arr;
}

nlohmann::json to_json(MotivicExpression const& e) {
  return {{"scalar", to_json(e.scalar_part())},
          {"x", to_json(e.x_part())},
          {"y", to_json(e.y_part())}};
}

Polynomial polynomial_from_json(nlohmann::json const& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  std::vector<Integer> coefficients;
  for (auto const& c : j) coefficients.push_back(integer_from_json(c));
  return Polynomial(std::move(coefficients));
}

MotivicExpression expression_from_json(nlohmann::json const& j) {
  auto part = [&j](char const* key) {
    return j.contains(key) ? polynomial_from_json(j.at(key)) : Polynomial{};
  };
  return MotivicExpression(part("scalar"), part("x"), part("y"));
}

}  // namespace lequiv::motivic
