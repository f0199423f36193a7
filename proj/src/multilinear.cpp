#include "tensorforge/multilinear.hpp"

#include <algorithm>
#include <set>

namespace tensorforge {

Space::Space(std::string n, std::vector<std::string> labels)
    : name(std::move(n)), basis_labels(std::move(labels)) {
  std::set<std::string> seen(basis_labels.begin(), basis_labels.end());
  if (seen.size() != basis_labels.size())
    throw InputError("space '" + name + "' has duplicate basis labels");
}

Space Space::numbered(std::string name, std::size_t dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= dim; ++i) labels.push_back(prefix + std::to_string(i));
  return Space(std::move(name), std::move(labels));
}

Space direct_sum(const Space& a, const Space& b, std::string name) {
  std::vector<std::string> labels;
  const bool clash = a.name == b.name;
  const std::string pa = clash ? a.name + "1" : a.name, pb = clash ? b.name + "2" : b.name;
  for (const auto& l : a.basis_labels) labels.push_back(pa + ":" + l);
  for (const auto& l : b.basis_labels) labels.push_back(pb + ":" + l);
  return Space(std::move(name), std::move(labels));
}

namespace {

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) throw InputError("basis index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n));
}

void check_value(const Vector& v, std::size_t m) {
  if (v.dim() != m) throw InputError("value has dimension " + std::to_string(v.dim()) + ", expected " + std::to_string(m));
}

}  // namespace

// ---------------------------------------------------------------- trilinear

TrilinearTable::TrilinearTable(std::size_t domain_dim, std::size_t codomain_dim)
    : n_(domain_dim), m_(codomain_dim), data_(domain_dim * domain_dim * domain_dim, Vector(codomain_dim)) {}

std::size_t TrilinearTable::index(std::size_t i, std::size_t j, std::size_t k) const {
  return (i * n_ + j) * n_ + k;
}

void TrilinearTable::set(std::size_t i, std::size_t j, std::size_t k, Vector value) {
  check_index(i, n_), check_index(j, n_), check_index(k, n_);
  check_value(value, m_);
  data_[index(i, j, k)] = std::move(value);
}

void TrilinearTable::add(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
  check_index(i, n_), check_index(j, n_), check_index(k, n_);
  data_[index(i, j, k)] += value;
}

Vector TrilinearTable::eval(const Vector& x, const Vector& y, const Vector& z) const {
  if (x.dim() != n_ || y.dim() != n_ || z.dim() != n_) throw InputError("trilinear argument dimension mismatch");
  Vector out(m_);
  Scalar xy;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        if (z[k].is_zero()) continue;
        const Vector& v = data_[index(i, j, k)];
        if (v.is_zero()) continue;
        out.axpy(xy * z[k], v);
      }
    }
  }
  return out;
}

Vector TrilinearTable::eval1(const Vector& x, std::size_t j, std::size_t k) const {
  Vector out(m_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!x[i].is_zero()) out.axpy(x[i], data_[index(i, j, k)]);
  return out;
}

Vector TrilinearTable::eval2(std::size_t i, const Vector& y, std::size_t k) const {
  Vector out(m_);
  for (std::size_t j = 0; j < n_; ++j)
    if (!y[j].is_zero()) out.axpy(y[j], data_[index(i, j, k)]);
  return out;
}

Vector TrilinearTable::eval3(std::size_t i, std::size_t j, const Vector& z) const {
  Vector out(m_);
  for (std::size_t k = 0; k < n_; ++k)
    if (!z[k].is_zero()) out.axpy(z[k], data_[index(i, j, k)]);
  return out;
}

std::vector<Triple> TrilinearTable::support() const {
  std::vector<Triple> s;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!at(i, j, k).is_zero()) s.push_back({i, j, k});
  return s;
}

bool TrilinearTable::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Vector& v) { return v.is_zero(); });
}

bool TrilinearTable::is_alternating() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const Vector& v = at(i, j, k);
        if (v != -at(j, i, k) || v != -at(i, k, j)) return false;
      }
  return true;
}

void AlternatingTrilinearTable::set(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
  if (!(i < j && j < k)) throw InputError("alternating trilinear entries must use increasing triples");
  full_.set(i, j, k, value);
  full_.set(j, k, i, value);
  full_.set(k, i, j, value);
  full_.set(j, i, k, -value);
  full_.set(i, k, j, -value);
  full_.set(k, j, i, -value);
}

std::vector<Triple> AlternatingTrilinearTable::support() const {
  std::vector<Triple> s;
  const std::size_t n = domain_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!at(i, j, k).is_zero()) s.push_back({i, j, k});
  return s;
}

AlternatingTrilinearTable AlternatingTrilinearTable::from_general(const TrilinearTable& t) {
  if (!t.is_alternating()) throw InputError("trilinear table is not alternating");
  AlternatingTrilinearTable a(t.domain_dim(), t.codomain_dim());
  a.full_ = t;
  return a;
}

// ---------------------------------------------------------------- bilinear

BilinearTable::BilinearTable(std::size_t domain_dim, std::size_t codomain_dim)
    : n_(domain_dim), m_(codomain_dim), data_(domain_dim * domain_dim, Vector(codomain_dim)) {}

void BilinearTable::set(std::size_t i, std::size_t j, Vector value) {
  check_index(i, n_), check_index(j, n_);
  check_value(value, m_);
  data_[i * n_ + j] = std::move(value);
}

Vector BilinearTable::eval(const Vector& x, const Vector& y) const {
  if (x.dim() != n_ || y.dim() != n_) throw InputError("bilinear argument dimension mismatch");
  Vector out(m_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& v = at(i, j);
      if (!v.is_zero()) out.axpy(x[i] * y[j], v);
    }
  }
  return out;
}

std::vector<Pair> BilinearTable::support() const {
  std::vector<Pair> s;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!at(i, j).is_zero()) s.push_back({i, j});
  return s;
}

bool BilinearTable::is_alternating() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

void AlternatingBilinearTable::set(std::size_t i, std::size_t j, const Vector& value) {
  if (!(i < j)) throw InputError("alternating bilinear entries must use increasing pairs");
  full_.set(i, j, value);
  full_.set(j, i, -value);
}

std::vector<Pair> AlternatingBilinearTable::support() const {
  std::vector<Pair> s;
  for (std::size_t i = 0; i < domain_dim(); ++i)
    for (std::size_t j = i + 1; j < domain_dim(); ++j)
      if (!at(i, j).is_zero()) s.push_back({i, j});
  return s;
}

// ---------------------------------------------------------------- pair action

PairAction::PairAction(std::size_t source_dim, std::size_t target_dim)
    : n_(source_dim), m_(target_dim), data_(source_dim * source_dim, Matrix(target_dim, target_dim)) {}

void PairAction::set(std::size_t i, std::size_t j, const Matrix& op) {
  if (!(i < j)) throw InputError("pair action entries must use increasing pairs");
  check_index(j, n_);
  if (op.rows() != m_ || op.cols() != m_) throw InputError("pair action operator has wrong shape");
  data_[i * n_ + j] = op;
  data_[j * n_ + i] = Scalar(-1) * op;
}

Matrix PairAction::eval(const Vector& x, const Vector& y) const {
  if (x.dim() != n_ || y.dim() != n_) throw InputError("pair action argument dimension mismatch");
  Matrix out(m_, m_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      out.axpy(x[i] * y[j], at(i, j));
    }
  }
  return out;
}

Vector PairAction::apply(const Vector& x, const Vector& y, const Vector& h) const {
  if (h.dim() != m_) throw InputError("pair action target dimension mismatch");
  Vector out(m_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    out.axpy(x[i], apply_basis(i, y, h));
  }
  return out;
}

Vector PairAction::apply_basis(std::size_t i, const Vector& y, const Vector& h) const {
  Vector out(m_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (y[j].is_zero() || i == j) continue;
    out.axpy(y[j], at(i, j) * h);
  }
  return out;
}

std::vector<Pair> PairAction::support() const {
  std::vector<Pair> s;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!at(i, j).is_zero()) s.push_back({i, j});
  return s;
}

// ---------------------------------------------------------------- wedge pairs

WedgePairBasis::WedgePairBasis(std::size_t dim) : dim_(dim) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) pairs_.push_back({i, j});
}

std::size_t WedgePairBasis::index_of(std::size_t i, std::size_t j) const {
  // Pairs before row i: sum_{r<i} (dim-1-r).
  return i * (2 * dim_ - i - 1) / 2 + (j - i - 1);
}

Vector wedge_expand(const WedgePairBasis& basis, const Vector& u, const Vector& v) {
  if (u.dim() != basis.space_dim() || v.dim() != basis.space_dim())
    throw InputError("wedge argument dimension mismatch");
  Vector out(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p) {
    auto [i, j] = basis.pair(p);
    Scalar c = u[i] * v[j];
    c -= u[j] * v[i];
    out[p] = std::move(c);
  }
  return out;
}

}  // namespace tensorforge
