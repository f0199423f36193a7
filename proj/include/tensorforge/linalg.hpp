#pragma once

#include "tensorforge/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tensorforge {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  Vector(std::initializer_list<Scalar> init) : entries_(init) {}
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

  static Vector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  /// this += s * o
  void axpy(const Scalar& s, const Vector& o);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= Scalar(-1); }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  /// this += s * o
  void axpy(const Scalar& s, const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with first-nonzero pivoting in column order.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = target, or nullopt when target is outside the column
/// space. Throws InputError when target.dim() != m.rows().
std::optional<Vector> solve_membership(const Matrix& m, const Vector& target);

std::optional<Matrix> inverse(const Matrix& m);

/// Indices of a maximal linearly independent subset of `vectors`, scanned in
/// order (greedy).
std::vector<std::size_t> independent_subset(std::span<const Vector> vectors, std::size_t dim);

}  // namespace tensorforge
