#pragma once

#include "tensorforge/actions.hpp"

#include <map>

namespace tensorforge {

/// Representation (V; l, m, r) of a 3-Leibniz algebra. Operators are stored
/// per ordered basis pair (a,b) at index a*dim+b:
///   l_act: v -> l(e_a, e_b, v)
///   m_act: v -> m(e_a, v, e_b)
///   r_act: v -> r(v, e_a, e_b)
struct ThreeLeibnizRep {
  ThreeLeibnizAlgebra algebra;
  Space carrier;
  std::vector<Matrix> l_act, m_act, r_act;

  static ThreeLeibnizRep zero(ThreeLeibnizAlgebra algebra, Space carrier);
  std::size_t dim() const { return algebra.space.dim(); }
  const Matrix& l(std::size_t a, std::size_t b) const { return l_act[a * dim() + b]; }
  const Matrix& m(std::size_t a, std::size_t b) const { return m_act[a * dim() + b]; }
  const Matrix& r(std::size_t a, std::size_t b) const { return r_act[a * dim() + b]; }

  /// Operators at general algebra arguments (x, y).
  Matrix l_eval(const Vector& x, const Vector& y) const { return eval_pair(l_act, x, y); }
  Matrix m_eval(const Vector& x, const Vector& y) const { return eval_pair(m_act, x, y); }
  Matrix r_eval(const Vector& x, const Vector& y) const { return eval_pair(r_act, x, y); }

 private:
  Matrix eval_pair(const std::vector<Matrix>& table, const Vector& x, const Vector& y) const;
};

/// The five compatibility laws on all ordered tuples. Refused when the
/// algebra fails check_3leibniz.
Report check_3leibniz_rep(const ThreeLeibnizRep& r, const CheckOptions& opts = {});

/// l(h1,h2,x) = [Lh1,Lh2,x], m(h1,x,h2) = [Lh1,x,Lh2] - L rho(Lh1,x)h2,
/// r(x,h1,h2) = [x,Lh1,Lh2] - L rho(x,Lh1)h2 on L over the descendent
/// algebra, unchecked.
ThreeLeibnizRep build_induced_rep(const EmbeddingTensorProblem& p);
/// Gated on check_net(all).
ThreeLeibnizRep induced_rep(const EmbeddingTensorProblem& p);

/// Cochain of degree n >= 1: a linear map (wedge^2 H)^(n-1) x H -> V stored
/// flat at ((p1*P + p2 ...)*dim_h + h)*dim_v + v with P = dim_h(dim_h-1)/2.
struct Cochain {
  std::size_t degree = 1;
  std::size_t h_dim = 0;
  std::size_t v_dim = 0;
  Vector coords;

  static std::size_t dimension(std::size_t degree, std::size_t h_dim, std::size_t v_dim);
  static Cochain zero(std::size_t degree, std::size_t h_dim, std::size_t v_dim);
  /// Degree-1 cochain from a v_dim x h_dim matrix.
  static Cochain from_map(const Matrix& m);
  Matrix as_map() const;

  std::size_t pair_count() const { return h_dim * (h_dim - 1) / 2; }
  /// phi(A_1, ..., A_{n-1}, w) for bivectors A_i in pair coordinates.
  Vector eval(const std::vector<Vector>& slots, const Vector& w) const;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// The 3-Leibniz coboundary of phi with coefficients in r.
Cochain delta(const ThreeLeibnizRep& r, const Cochain& phi);
/// Matrix of delta on degree-n cochains; columns are basis cochains.
Matrix delta_matrix(const ThreeLeibnizRep& r, std::size_t n);

/// Cohomology dimensions for one degree.
struct CohomologyDims {
  std::size_t degree = 0;
  std::size_t cochains = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t cohomology() const { return cocycles - coboundaries; }
};

/// Default 3, overridden by TENSORFORGE_DEGREE_CAP.
std::size_t default_degree_cap();

/// The cochain complex of an embedding tensor, built from the induced
/// representation. Construction is refused unless check_net(all) passes.
/// Coboundary matrices are assembled on first use and cached.
class CochainComplex {
 public:
  explicit CochainComplex(EmbeddingTensorProblem p, std::optional<std::size_t> cap = std::nullopt);
  /// Skips the embedding tensor check.
  static CochainComplex unchecked(EmbeddingTensorProblem p, std::optional<std::size_t> cap = std::nullopt);

  const EmbeddingTensorProblem& problem() const { return p_; }
  const ThreeLeibnizRep& rep() const { return rep_; }
  std::size_t cap() const { return cap_; }

  /// dim C^n; C^0 is wedge^2 L.
  std::size_t cochain_dim(std::size_t n) const;

  /// u -> L rho(a1,a2)u - [a1,a2,Lu]_L.
  Cochain delta0(const Vector& a1, const Vector& a2) const;
  /// Refused (PreconditionError) above the cap.
  Cochain delta(const Cochain& phi) const;
  /// delta_0 (columns: pairs a<b of L) or delta_n for n >= 1, n <= cap.
  const Matrix& matrix(std::size_t n) const;
  /// 1 <= n <= cap.
  CohomologyDims dims(std::size_t n) const;

 private:
  CochainComplex(EmbeddingTensorProblem p, std::size_t cap, bool);
  void require_degree(std::size_t n) const;

  EmbeddingTensorProblem p_;
  ThreeLeibnizRep rep_;
  std::size_t cap_;
  mutable std::map<std::size_t, Matrix> cache_;
  mutable std::map<std::size_t, std::size_t> ranks_;
};

/// Psi(phi)(A_1..A_{n-1}, w) = f_L phi(g u_1 ^ g v_1, ..., g w) with
/// g = f_H^-1. Throws InputError when f_H is singular.
Cochain pushforward(const NetHomomorphism& h, const Cochain& phi);
Matrix pushforward_matrix(const NetHomomorphism& h, std::size_t n);

/// f_L l1(h1,h2,x) = l2(f_H h1, f_H h2, f_L x) and the analogues for m and r
/// on all basis pairs of H.
Report check_rep_naturality(const NetHomomorphism& h, const CheckOptions& opts = {});

}  // namespace tensorforge
