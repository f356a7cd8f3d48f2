#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nichols/cyclo.hpp"

namespace nichols {

using Vector = std::vector<CycScalar>;

/// Dense row-major matrix over the cyclotomic numbers.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  CycScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Matrix scaled(const CycScalar& s) const;
  bool is_zero() const;
  bool is_identity() const;
  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per row of the result.
Matrix nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Some solution of a x = b, or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Incremental linear independence tracker (keeps an echelonized copy).
class SpanBuilder {
public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// Adds v if it is independent of what is already there; reports whether it was.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  /// Pivot column of each stored row; rows are kept fully reduced, so any v in
  /// the span equals sum_k v[pivots()[k]] * row_k.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

private:
  Vector reduce(Vector v) const;

  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nichols
