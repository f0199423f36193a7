#pragma once

#include "tensorforge/actions.hpp"

namespace tensorforge {

/// A covector on `space`.
struct TraceMap {
  Space space;
  Vector coeffs;

  static TraceMap zero(const Space& s) { return TraceMap{s, Vector(s.dim())}; }
  Scalar operator()(const Vector& v) const;
};

/// s([x,y]) = 0 on basis pairs i<j.
Report check_trace(const TraceMap& s, const LieAlgebra& lie, const CheckOptions& opts = {});
/// The Lie condition plus s(x |> y) = 0 on ordered pairs.
Report check_trace(const TraceMap& s, const LeibnizLieAlgebra& a, const CheckOptions& opts = {});

/// [x,y,z] = s(x)[y,z] + s(y)[z,x] + s(z)[x,y], unchecked.
ThreeLieAlgebra build_threelie_from_lie(const LieAlgebra& lie, const TraceMap& s);
/// Gated on check_lie and check_trace.
ThreeLieAlgebra threelie_from_lie(const LieAlgebra& lie, const TraceMap& s);

/// rho: L -> Der(H), one matrix per basis vector of L.
struct LieCoherentAction {
  LieAlgebra lie_L;
  LieAlgebra lie_H;
  std::vector<Matrix> rho;

  Matrix rho_of(const Vector& x) const;
};

/// Homomorphism law, derivation law and [rho(l)h1,h2]_H = 0 on basis tuples.
/// Refused when either bracket fails check_lie.
Report check_lie_coherent(const LieCoherentAction& a, const CheckOptions& opts = {});

/// rho_s(l1,l2) = s(l1) rho(l2) - s(l2) rho(l1), unchecked.
PairAction build_rho_sigma(const LieCoherentAction& a, const TraceMap& s_L);
/// Gated on check_lie_coherent and check_trace(s_L).
PairAction rho_sigma(const LieCoherentAction& a, const TraceMap& s_L);

/// (H_s; rho_s) over L_s, unchecked.
CoherentActionData build_sigma_action(const LieCoherentAction& a, const TraceMap& s_L, const TraceMap& s_H);
/// Gated on check_lie_coherent and both trace checks.
CoherentActionData sigma_action(const LieCoherentAction& a, const TraceMap& s_L, const TraceMap& s_H);

struct LieNet {
  LieCoherentAction action;
  LinearMap lambda;  // H -> L
};

/// [Lh1,Lh2]_L = L(rho(Lh1)h2 + [h1,h2]_H) on ordered pairs. Refused unless
/// the action passes check_lie_coherent.
Report check_lie_net(const LieNet& n, const CheckOptions& opts = {});

/// s_L(L e_i) = s_H(e_i) on each basis vector of H.
Report check_trace_compat(const LieNet& n, const TraceMap& s_L, const TraceMap& s_H, const CheckOptions& opts = {});

/// (L_s, H_s, rho_s, L), unchecked.
EmbeddingTensorProblem build_lift(const LieNet& n, const TraceMap& s_L, const TraceMap& s_H);
/// Gated on check_lie_net, both traces and check_trace_compat.
EmbeddingTensorProblem lift_net(const LieNet& n, const TraceMap& s_L, const TraceMap& s_H);

/// 3-Lie part from the Lie bracket and braces {x,y,z} = s(x) y |> z - s(y) x |> z, unchecked.
ThreeLeibnizLieAlgebra build_three_ll(const LeibnizLieAlgebra& a, const TraceMap& s);
/// Gated on check_leibniz_lie and check_trace (with the triangle products).
ThreeLeibnizLieAlgebra three_ll_from_leibniz_lie(const LeibnizLieAlgebra& a, const TraceMap& s);

}  // namespace tensorforge
