#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nchopf/polynomial.hpp"
#include "nchopf/scalar.hpp"

namespace nchopf {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows given as nested lists; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_unipotent_upper() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// A ⊗ B (Kronecker product).
Matrix kron(const Matrix& a, const Matrix& b);

/// Rank by fraction-free (Bareiss) elimination after clearing denominators
/// row by row.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form over Q; `pivots` receives the pivot columns.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Incrementally built span of polynomials, viewed as sparse vectors indexed
/// by words. Each stored vector is normalized so that its ShortLex-largest
/// word (the pivot) has coefficient 1 and no other stored vector mentions
/// that pivot in leading position. Tracks how each stored vector combines
/// the inserted inputs.
class LinearSpan {
 public:
  /// Returns true when `p` was independent of everything inserted so far.
  bool insert(const Polynomial& p);
  bool contains(const Polynomial& p) const { return reduce(p).residual.is_zero(); }
  /// Coefficients c with Σ c_i input_i = p, or nullopt outside the span.
  std::optional<std::vector<Scalar>> express(const Polynomial& p) const;
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t inputs() const noexcept { return inputs_; }

 private:
  struct Row {
    Polynomial vector;
    std::map<std::size_t, Scalar> combination;
  };
  struct Reduced {
    Polynomial residual;
    std::map<std::size_t, Scalar> combination;  // p - residual = Σ combination_i input_i
  };
  Reduced reduce(const Polynomial& p) const;

  std::map<Word, Row, ShortLex> rows_;
  std::size_t inputs_ = 0;
};

}  // namespace nchopf
