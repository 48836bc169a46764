#include "lequiv/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "lequiv/json_util.hpp"

namespace lequiv {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
  for (auto const& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    for (long long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::column(std::vector<Integer> const& v) {
  return from_columns({v});
}

IntMatrix IntMatrix::from_columns(std::vector<std::vector<Integer>> const& cols) {
  if (cols.empty()) return {};
  IntMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != m.rows_) {
      throw std::invalid_argument("columns of different lengths");
    }
    for (int i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Integer> IntMatrix::column_vector(int j) const {
  std::vector<Integer> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(int row0, int col0, int rows, int cols) const {
  IntMatrix b(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  int const n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = *this;
  Integer sign = 1;
  Integer previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with < 0) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(int target, int source, Integer const& factor) {
  if (factor == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(int target, int source, Integer const& factor) {
  if (factor == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(IntMatrix const& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x = -x;
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < rows_; ++i) {
    if (i) out << ", ";
    out << "(";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j);
    }
    out << ")";
  }
  out << ")";
  return out.str();
}

IntMatrix direct_sum(IntMatrix const& a, IntMatrix const& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> diag;
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) diag.push_back(d(i, i));
  return diag;
}

SmithForm smith_normal_form(IntMatrix const& a) {
  int const m = a.rows();
  int const n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = s.d;

  for (int t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        Integer const q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Integer const q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        s.v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the trailing block.
      int bad_row = -1;
      for (int i = t + 1; i < m && bad_row < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      d.add_row_multiple(t, bad_row, 1);
      s.u.add_row_multiple(t, bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

namespace {

// Column operations bringing A to column echelon form; returns the
// accumulated unimodular transform and the echelon rank.
struct ColumnEchelon {
  IntMatrix transform;
  int rank = 0;
};

ColumnEchelon column_echelon(IntMatrix a) {
  int const m = a.rows();
  int const n = a.cols();
  IntMatrix v = IntMatrix::identity(n);
  int rank = 0;
  for (int row = 0; row < m && rank < n; ++row) {
    // Euclid on the entries of this row in columns rank..n-1.
    while (true) {
      int pivot = -1;
      for (int j = rank; j < n; ++j)
        if (a(row, j) != 0 && (pivot < 0 || abs(a(row, j)) < abs(a(row, pivot))))
          pivot = j;
      if (pivot < 0) break;
      a.swap_cols(rank, pivot);
      v.swap_cols(rank, pivot);
      bool done = true;
      for (int j = rank + 1; j < n; ++j) {
        Integer const q = a(row, j) / a(row, rank);
        a.add_col_multiple(j, rank, -q);
        v.add_col_multiple(j, rank, -q);
        if (a(row, j) != 0) done = false;
      }
      if (done) {
        ++rank;
        break;
      }
    }
  }
  return {std::move(v), rank};
}

}  // namespace

IntMatrix integral_kernel(IntMatrix const& a) {
  auto const echelon = column_echelon(a);
  int const n = a.cols();
  return echelon.transform.block(0, echelon.rank, n, n - echelon.rank);
}

IntMatrix complete_to_unimodular(std::vector<Integer> const& v) {
  // Row vector v^T reduced by column operations to (g, 0, ..., 0): v^T W = g e_1^T.
  // With g = ±1, v is the first column of (W^{-1})^T.
  IntMatrix row = IntMatrix::column(v).transpose();
  auto const echelon = column_echelon(row);
  IntMatrix const reduced = row * echelon.transform;
  if (echelon.rank != 1 || abs(reduced(0, 0)) != 1) {
    throw std::invalid_argument("vector is not primitive");
  }
  IntMatrix completion = unimodular_inverse(echelon.transform).transpose();
  if (reduced(0, 0) < 0) completion.negate_col(0);
  return completion;
}

std::optional<IntMatrix> integral_solve(IntMatrix const& a, IntMatrix const& b) {
  if (!a.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("integral_solve shape mismatch");
  }
  int const n = a.rows();
  Integer const det = a.determinant();
  if (det == 0) throw std::invalid_argument("integral_solve on a singular matrix");
  // Adjugate via cofactors; n is tiny here.
  IntMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Integer const cofactor = minor.determinant();
      adj(i, j) = ((i + j) % 2 == 0) ? cofactor : Integer(-cofactor);
    }
  IntMatrix x = adj * b;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      if (x(i, j) % det != 0) return std::nullopt;
      x(i, j) /= det;
    }
  return x;
}

IntMatrix unimodular_inverse(IntMatrix const& a) {
  auto inv = integral_solve(a, IntMatrix::identity(a.rows()));
  if (!inv) throw std::invalid_argument("matrix is not unimodular");
  return *inv;
}

nlohmann::json to_json(IntMatrix const& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(nlohmann::json const& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  int const rows = static_cast<int>(j.size());
  int const cols = static_cast<int>(j[0].size());
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

}  // namespace lequiv
