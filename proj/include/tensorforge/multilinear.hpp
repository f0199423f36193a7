#pragma once

#include "tensorforge/linalg.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tensorforge {

/// A named finite-dimensional space with labelled basis e_1..e_dim.
struct Space {
  std::string name;
  std::vector<std::string> basis_labels;

  Space() = default;
  Space(std::string name, std::vector<std::string> labels);
  /// Labels default to name-prefixed indices: "e1", "e2", ...
  static Space numbered(std::string name, std::size_t dim, const std::string& prefix = "e");

  std::size_t dim() const { return basis_labels.size(); }
  const std::string& label(std::size_t i) const { return basis_labels.at(i); }

  friend bool operator==(const Space&, const Space&) = default;
};

/// Direct sum; labels are "A:x" then "B:y", or "A1:x" and "A2:y" when the names coincide.
Space direct_sum(const Space& a, const Space& b, std::string name);

using Triple = std::array<std::size_t, 3>;
using Pair = std::array<std::size_t, 2>;

/// Trilinear map V x V x V -> W stored by its values on ordered basis triples.
/// Unset triples are zero.
class TrilinearTable {
 public:
  TrilinearTable() = default;
  TrilinearTable(std::size_t domain_dim, std::size_t codomain_dim);

  std::size_t domain_dim() const { return n_; }
  std::size_t codomain_dim() const { return m_; }

  const Vector& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, Vector value);
  void add(std::size_t i, std::size_t j, std::size_t k, const Vector& value);

  Vector eval(const Vector& x, const Vector& y, const Vector& z) const;
  /// Evaluation with one general argument in the given slot and basis
  /// vectors in the other two.
  Vector eval1(const Vector& x, std::size_t j, std::size_t k) const;
  Vector eval2(std::size_t i, const Vector& y, std::size_t k) const;
  Vector eval3(std::size_t i, std::size_t j, const Vector& z) const;

  /// Triples with a nonzero value, lexicographic.
  std::vector<Triple> support() const;
  bool is_zero() const;
  bool is_alternating() const;

  friend bool operator==(const TrilinearTable&, const TrilinearTable&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t n_ = 0, m_ = 0;
  std::vector<Vector> data_;
};

/// Skew-symmetric trilinear map. Values are set on strictly increasing
/// triples only; every permutation is derived with its sign and repeated
/// indices are zero.
class AlternatingTrilinearTable {
 public:
  AlternatingTrilinearTable() = default;
  AlternatingTrilinearTable(std::size_t domain_dim, std::size_t codomain_dim)
      : full_(domain_dim, codomain_dim) {}

  std::size_t domain_dim() const { return full_.domain_dim(); }
  std::size_t codomain_dim() const { return full_.codomain_dim(); }

  /// Requires i < j < k.
  void set(std::size_t i, std::size_t j, std::size_t k, const Vector& value);
  const Vector& at(std::size_t i, std::size_t j, std::size_t k) const { return full_.at(i, j, k); }
  Vector eval(const Vector& x, const Vector& y, const Vector& z) const { return full_.eval(x, y, z); }

  /// Increasing triples with a nonzero value.
  std::vector<Triple> support() const;
  const TrilinearTable& as_general() const { return full_; }
  /// Throws InputError if `t` is not alternating.
  static AlternatingTrilinearTable from_general(const TrilinearTable& t);

  friend bool operator==(const AlternatingTrilinearTable&, const AlternatingTrilinearTable&) = default;

 private:
  TrilinearTable full_;
};

/// Bilinear map V x V -> W on ordered basis pairs.
class BilinearTable {
 public:
  BilinearTable() = default;
  BilinearTable(std::size_t domain_dim, std::size_t codomain_dim);

  std::size_t domain_dim() const { return n_; }
  std::size_t codomain_dim() const { return m_; }

  const Vector& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Vector value);
  Vector eval(const Vector& x, const Vector& y) const;

  std::vector<Pair> support() const;
  bool is_alternating() const;

  friend bool operator==(const BilinearTable&, const BilinearTable&) = default;

 private:
  std::size_t n_ = 0, m_ = 0;
  std::vector<Vector> data_;
};

/// Antisymmetric bilinear map set on pairs i < j.
class AlternatingBilinearTable {
 public:
  AlternatingBilinearTable() = default;
  AlternatingBilinearTable(std::size_t domain_dim, std::size_t codomain_dim)
      : full_(domain_dim, codomain_dim) {}

  std::size_t domain_dim() const { return full_.domain_dim(); }
  std::size_t codomain_dim() const { return full_.codomain_dim(); }

  /// Requires i < j.
  void set(std::size_t i, std::size_t j, const Vector& value);
  const Vector& at(std::size_t i, std::size_t j) const { return full_.at(i, j); }
  Vector eval(const Vector& x, const Vector& y) const { return full_.eval(x, y); }

  std::vector<Pair> support() const;
  const BilinearTable& as_general() const { return full_; }

  friend bool operator==(const AlternatingBilinearTable&, const AlternatingBilinearTable&) = default;

 private:
  BilinearTable full_;
};

/// rho: wedge^2 L -> End(H). Set on pairs i < j; (j,i) is the negation and
/// (i,i) is zero.
class PairAction {
 public:
  PairAction() = default;
  PairAction(std::size_t source_dim, std::size_t target_dim);

  std::size_t source_dim() const { return n_; }
  std::size_t target_dim() const { return m_; }

  /// Requires i < j; `op` is target_dim x target_dim.
  void set(std::size_t i, std::size_t j, const Matrix& op);
  const Matrix& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Matrix eval(const Vector& x, const Vector& y) const;
  Vector apply(const Vector& x, const Vector& y, const Vector& h) const;
  /// rho(e_i, y) h with y general.
  Vector apply_basis(std::size_t i, const Vector& y, const Vector& h) const;

  std::vector<Pair> support() const;

  friend bool operator==(const PairAction&, const PairAction&) = default;

 private:
  std::size_t n_ = 0, m_ = 0;
  std::vector<Matrix> data_;
};

/// Basis of wedge^2 V: pairs (i,j), i < j, in lexicographic order.
class WedgePairBasis {
 public:
  explicit WedgePairBasis(std::size_t dim);

  std::size_t space_dim() const { return dim_; }
  std::size_t size() const { return pairs_.size(); }
  const Pair& pair(std::size_t index) const { return pairs_[index]; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  /// Requires i < j.
  std::size_t index_of(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_;
  std::vector<Pair> pairs_;
};

/// Coordinates of u ^ v: coefficient at (i,j) is u_i v_j - u_j v_i.
Vector wedge_expand(const WedgePairBasis& basis, const Vector& u, const Vector& v);

}  // namespace tensorforge
