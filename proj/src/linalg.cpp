#include "tensorforge/linalg.hpp"

#include <algorithm>
#include <string>

namespace tensorforge {

Vector Vector::unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.dim() != dim()) throw InputError("vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!o[i].is_zero()) entries_[i] += o[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.dim() != dim()) throw InputError("vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!o[i].is_zero()) entries_[i] -= o[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& e : entries_)
    if (!e.is_zero()) e *= s;
  return *this;
}

void Vector::axpy(const Scalar& s, const Vector& o) {
  if (o.dim() != dim()) throw InputError("vector dimension mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < dim(); ++i) entries_[i].add_product(s, o[i]);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.dim() != rows_) throw InputError("column dimension mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_)
    if (!e.is_zero()) e *= s;
  return *this;
}

void Matrix::axpy(const Scalar& s, const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("matrix shape mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i].add_product(s, o.data_[i]);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j).add_product(aik, b(k, j));
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.dim()) throw InputError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i].add_product(a(i, k), v[k]);
  return out;
}

namespace {

// Eliminates column entries using pivot rows. When `full` is false only rows
// below the pivot are cleared (enough for rank).
Echelon eliminate(Matrix m, bool full) {
  Echelon e;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t next = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t p = next;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != next)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(next, j));
    Scalar inv = Scalar(1) / m(next, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(next, j).is_zero()) continue;
      m(next, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t r = full ? 0 : next + 1; r < rows; ++r) {
      if (r == next || m(r, c).is_zero()) continue;
      Scalar f = -m(r, c);
      for (std::size_t j : support) m(r, j).add_product(f, m(next, j));
    }
    e.pivot_cols.push_back(c);
    ++next;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

Echelon row_reduce(Matrix m) { return eliminate(std::move(m), true); }

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side; rank is invariant under transposition.
  if (m.rows() > m.cols()) return eliminate(m.transpose(), false).rank();
  return eliminate(m, false).rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_membership(const Matrix& m, const Vector& target) {
  if (target.dim() != m.rows())
    throw InputError("target dimension " + std::to_string(target.dim()) +
                     " does not match matrix rows " + std::to_string(m.rows()));
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = target[r];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::vector<std::size_t> independent_subset(std::span<const Vector> vectors, std::size_t dim) {
  // Incremental echelon basis: rows normalised at their pivot column.
  std::vector<Vector> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    Vector v = vectors[idx];
    if (v.dim() != dim) throw InputError("vector dimension mismatch");
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!v[pivots[b]].is_zero()) v.axpy(-v[pivots[b]], basis[b]);
    std::size_t p = 0;
    while (p < dim && v[p].is_zero()) ++p;
    if (p == dim) continue;
    v *= Scalar(1) / v[p];
    // Keep earlier basis rows reduced at the new pivot.
    for (auto& b : basis)
      if (!b[p].is_zero()) b.axpy(-b[p], v);
    basis.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

}  // namespace tensorforge
