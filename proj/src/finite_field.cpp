#include "lequiv/finite_field.hpp"

#include <stdexcept>

namespace lequiv::ffcount {

namespace {

std::vector<int> to_digits(int value, int p, int m) {
  std::vector<int> digits(m);
  for (int i = 0; i < m; ++i) {
    digits[i] = value % p;
    value /= p;
  }
  return digits;
}

int from_digits(std::vector<int> const& digits, int p) {
  int value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) value = value * p + *it;
  return value;
}

// Remainder of a modulo monic b over F_p; both low-to-high.
std::vector<int> poly_mod(std::vector<int> a, std::vector<int> const& b, int p) {
  int const db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int const c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
  }
  a.resize(std::max(db, 0));
  return a;
}

bool is_prime_up_to_7(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

}  // namespace

bool is_irreducible(std::vector<int> const& monic, int p) {
  int const m = static_cast<int>(monic.size()) - 1;
  if (m < 1 || monic.back() != 1) throw std::invalid_argument("expected a monic polynomial");
  if (m == 1) return true;
  for (int deg = 1; deg <= m / 2; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> divisor = to_digits(code, p, deg);
      divisor.push_back(1);
      auto const rem = poly_mod(monic, divisor, p);
      bool zero = true;
      for (int c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int> first_irreducible(int p, int m) {
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  // Counting up with x^{m-1} as the most significant digit is lexicographic
  // order on (c_{m-1}, ..., c_0).
  for (int code = 0; code < count; ++code) {
    std::vector<int> poly = to_digits(code, p, m);
    poly.push_back(1);
    if (is_irreducible(poly, p)) return poly;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, int m) : p_(p), m_(m), order_(1) {
  if (!is_prime_up_to_7(p)) throw std::invalid_argument("characteristic must be a prime <= 7");
  if (m < 1 || m > 4) throw std::invalid_argument("extension degree must be in 1..4");
  for (int i = 0; i < m; ++i) order_ *= p;
  modulus_ = first_irreducible(p, m);

  // Discrete logarithms from a primitive element.
  for (int g = 1; g < order_ && exp_.empty(); ++g) {
    std::vector<Elem> powers{1};
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      powers.push_back(x);
      x = mul_slow(x, static_cast<Elem>(g));
    }
    if (static_cast<int>(powers.size()) == order_ - 1) exp_ = std::move(powers);
  }
  log_.assign(order_, -1);
  for (int i = 0; i < order_ - 1; ++i) log_[exp_[i]] = i;

  neg_table_.resize(order_);
  inv_table_.resize(order_);
  for (int a = 0; a < order_; ++a) {
    auto digits = to_digits(a, p_, m_);
    for (auto& d : digits) d = (p_ - d) % p_;
    neg_table_[a] = static_cast<Elem>(from_digits(digits, p_));
    inv_table_[a] = a == 0 ? 0 : exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  }
  if (order_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    mul_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b) {
        add_table_[a * order_ + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table_[a * order_ + b] = mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    tabulated_ = true;
  }
}

Elem FiniteField::add_slow(Elem a, Elem b) const {
  int result = 0;
  int scale = 1;
  int x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    result += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(result);
}

Elem FiniteField::mul_slow(Elem a, Elem b) const {
  auto const da = to_digits(a, p_, m_);
  auto const db = to_digits(b, p_, m_);
  std::vector<int> product(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) product[i + j] = (product[i + j] + da[i] * db[j]) % p_;
  return static_cast<Elem>(from_digits(poly_mod(product, modulus_, p_), p_));
}

Elem FiniteField::add(Elem a, Elem b) const {
  return tabulated_ ? add_table_[a * order_ + b] : add_slow(a, b);
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg_table_[b]); }

Elem FiniteField::neg(Elem a) const { return neg_table_[a]; }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (tabulated_) return mul_table_[a * order_ + b];
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (order_ - 1)];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_table_[a];
}

Elem FiniteField::from_integer(long long v) const {
  return static_cast<Elem>(((v % p_) + p_) % p_);
}

std::string FiniteField::name() const { return "F_" + std::to_string(order_); }

nlohmann::json FiniteField::describe() const {
  return {{"p", p_}, {"m", m_}, {"order", order_}, {"modulus", modulus_}};
}

std::vector<int> reduce_rows(FieldMatrix& a, FiniteField const& f) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int pivot = -1;
    for (int i = row; i < a.rows; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < a.cols; ++j) std::swap(a(row, j), a(pivot, j));
    Elem const scale = f.inv(a(row, col));
    for (int j = 0; j < a.cols; ++j) a(row, j) = f.mul(a(row, j), scale);
    for (int i = 0; i < a.rows; ++i) {
      if (i == row || a(i, col) == 0) continue;
      Elem const factor = a(i, col);
      for (int j = 0; j < a.cols; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(FieldMatrix m, FiniteField const& f) {
  return static_cast<int>(reduce_rows(m, f).size());
}

FieldMatrix nullspace(FieldMatrix const& m, FiniteField const& f) {
  FieldMatrix r = m;
  auto const pivots = reduce_rows(r, f);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FieldMatrix basis(static_cast<int>(free_cols.size()), m.cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int const fc = free_cols[k];
    basis(static_cast<int>(k), fc) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis(static_cast<int>(k), pivots[i]) = f.neg(r(static_cast<int>(i), fc));
    }
  }
  return basis;
}

}  // namespace lequiv::ffcount
