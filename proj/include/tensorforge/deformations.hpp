#pragma once

#include "tensorforge/cohomology.hpp"

namespace tensorforge {

/// Lambda_t = Lambda + t Lambda1 with t^2 = 0.
struct Deformation {
  EmbeddingTensorProblem base;
  LinearMap direction;  // Lambda1: H -> L
};

/// Lambda1 - Lambda1' = delta0(omega) for a bivector omega of L.
struct EquivalenceWitness {
  /// Coordinates of omega in the pair basis of wedge^2 L.
  Vector bivector;
  /// a1, a2 with a1 ^ a2 = omega, when omega is decomposable.
  std::optional<std::pair<Vector, Vector>> factors;
  /// Re-verification of the coboundary relation, plus the first-order
  /// homomorphism and compatibility conditions (informational).
  Report report;
};

/// First-order identity on all ordered triples versus delta_1(Lambda1) = 0;
/// the report carries both verdicts and a failing check when they disagree.
/// Refused unless the base passes check_net(all).
Report check_infinitesimal(const Deformation& d, const CheckOptions& opts = {});

/// The quadratic and cubic conditions of a polynomial deformation, each on
/// all ordered triples. Refused like check_infinitesimal.
Report check_higher_order(const Deformation& d, const CheckOptions& opts = {});

/// Solves Lambda1 - Lambda1' = delta0(omega). Throws InputError when the
/// bases differ and PreconditionError unless both directions are cocycles.
std::optional<EquivalenceWitness> are_equivalent(const Deformation& d1, const Deformation& d2);

struct Classification {
  CohomologyDims dims;
  /// Cocycles whose classes form a basis of H^1.
  std::vector<LinearMap> representatives;
};

/// Gated on check_net(all).
Classification classify(const EmbeddingTensorProblem& p);

/// omega = a1 ^ a2 when omega (pair coordinates on a space of dimension n)
/// is decomposable.
std::optional<std::pair<Vector, Vector>> factor_bivector(const Vector& omega, std::size_t n);

}  // namespace tensorforge
