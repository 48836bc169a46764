#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lequiv/integer.hpp"

namespace lequiv {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix column(std::vector<Integer> const& v);
  static IntMatrix from_columns(std::vector<std::vector<Integer>> const& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(int i, int j) { return data_[i * cols_ + j]; }
  Integer const& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column_vector(int j) const;
  IntMatrix transpose() const;
  IntMatrix block(int row0, int col0, int rows, int cols) const;
  bool is_symmetric() const;
  Integer determinant() const;

  // Elementary operations, also used to track transforms.
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void add_row_multiple(int target, int source, Integer const& factor);
  void add_col_multiple(int target, int source, Integer const& factor);
  void negate_row(int r);
  void negate_col(int c);

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend IntMatrix operator+(IntMatrix const& a, IntMatrix const& b);
  friend IntMatrix operator-(IntMatrix const& a);
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix direct_sum(IntMatrix const& a, IntMatrix const& b);

// U·A·V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<Integer> diagonal() const;
};
SmithForm smith_normal_form(IntMatrix const& a);

// Basis (as columns) of the saturated lattice {x in Z^n : A x = 0}.
IntMatrix integral_kernel(IntMatrix const& a);

// Unimodular matrix whose first column is the given primitive vector.
// Throws std::invalid_argument if the vector is not primitive.
IntMatrix complete_to_unimodular(std::vector<Integer> const& v);

// X with A·X = B when A is square nonsingular and the solution is integral.
std::optional<IntMatrix> integral_solve(IntMatrix const& a, IntMatrix const& b);

// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(IntMatrix const& a);

nlohmann::json to_json(IntMatrix const& m);
IntMatrix int_matrix_from_json(nlohmann::json const& j);

}  // namespace lequiv
