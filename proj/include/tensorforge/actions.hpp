#pragma once

#include "tensorforge/algebras.hpp"

namespace tensorforge {

/// rho: wedge^2 L -> End(H).
struct RepresentationData {
  ThreeLieAlgebra algebra;  // L
  Space carrier;            // H
  PairAction rho;
};

struct CoherentActionData {
  RepresentationData rep;
  AlternatingTrilinearTable target_bracket;  // [-,-,-]_H

  ThreeLieAlgebra target() const { return ThreeLieAlgebra{rep.carrier, target_bracket}; }
};

/// (L, H, rho, Lambda: H -> L).
struct EmbeddingTensorProblem {
  CoherentActionData action;
  LinearMap lambda;

  const ThreeLieAlgebra& L() const { return action.rep.algebra; }
  const Space& H() const { return action.rep.carrier; }
  const PairAction& rho() const { return action.rep.rho; }
  const TrilinearTable& H_bracket() const { return action.target_bracket.as_general(); }

  /// Same action with a different tensor.
  EmbeddingTensorProblem with_lambda(const Matrix& m) const;
};

/// (f_L, f_H) from `source` (Lambda1) to `target` (Lambda2).
struct NetHomomorphism {
  LinearMap f_L;
  LinearMap f_H;
  EmbeddingTensorProblem source;
  EmbeddingTensorProblem target;
};

enum class TripleMode { all, increasing };

/// ad(x,y) z = [x,y,z].
PairAction adjoint_action(const ThreeLieAlgebra& a);

/// rho(x, e_j) and rho(e_i, y) with one general argument.
Matrix rho_left(const PairAction& rho, const Vector& x, std::size_t j);
Matrix rho_right(const PairAction& rho, std::size_t i, const Vector& y);

/// Both representation laws on all ordered 4-tuples. Refused when L is not
/// a 3-Lie algebra.
Report check_representation(const RepresentationData& r, const CheckOptions& opts = {});

/// Representation laws plus the derivation and annihilation laws, the latter
/// two on pairs i<j times all ordered triples of H. Refused when L or H is
/// not a 3-Lie algebra.
Report check_coherent_action(const CoherentActionData& c, const CheckOptions& opts = {});

/// Space of the direct sum L + H, with L's basis first.
Space hemisemidirect_space(const CoherentActionData& c);

/// [l1+h1, l2+h2, l3+h3] = [l1,l2,l3]_L + rho(l1,l2)h3 + [h1,h2,h3]_H with
/// no precondition check.
ThreeLeibnizAlgebra build_hemisemidirect(const CoherentActionData& c);

/// build_hemisemidirect, refused unless the action is coherent.
ThreeLeibnizAlgebra hemisemidirect(const CoherentActionData& c);

/// [Lh1,Lh2,Lh3]_L = L(rho(Lh1,Lh2)h3 + [h1,h2,h3]_H). Refused when the
/// action is not coherent.
Report check_net(const EmbeddingTensorProblem& p, TripleMode mode = TripleMode::all,
                 const CheckOptions& opts = {});

/// Closure of the graph {Lh + h} under the hemisemidirect bracket, on all
/// ordered triples of the graph basis (L e_i + e_i). Refused when the action
/// is not coherent.
Report graph_check(const EmbeddingTensorProblem& p, const CheckOptions& opts = {});

/// rho(Lh1,Lh2)h3 + [h1,h2,h3]_H, unchecked.
TrilinearTable descendent_bracket(const EmbeddingTensorProblem& p);
/// rho(Lh1,Lh2)h3, unchecked.
TrilinearTable induced_braces(const EmbeddingTensorProblem& p);

/// Gated on check_net(all).
ThreeLeibnizAlgebra descendent(const EmbeddingTensorProblem& p);
ThreeLeibnizLieAlgebra induced_3ll(const EmbeddingTensorProblem& p);

/// L[h1,h2,h3]_L = [Lh1,Lh2,Lh3]_L on all ordered triples.
Report check_descendent_hom(const EmbeddingTensorProblem& p, const CheckOptions& opts = {});

/// Lambda2 f_H = f_L Lambda1 and f_H rho(l1,l2) h = rho(f_L l1, f_L l2) f_H h,
/// then the two consequences for the descendent brackets and braces.
/// Refused when either tensor fails check_net(all) or a map is not a 3-Lie
/// homomorphism. Throws InputError on a dimension mismatch.
Report check_net_hom(const NetHomomorphism& h, const CheckOptions& opts = {});

}  // namespace tensorforge
