#pragma once

// Independent reference computations used as test oracles. Nothing here
// calls the library's elimination or coboundary code.

#include "tensorforge/actions.hpp"

#include <cstddef>
#include <vector>

namespace tf_test {

using namespace tensorforge;

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing denominators row by row.
std::size_t bareiss_rank(const Matrix& m);

/// Fundamental identity evaluated on every ordered basis 5-tuple, straight
/// from the definition. Returns the number of failing tuples.
std::size_t fundamental_identity_failures(const TrilinearTable& t);

/// Degree-1 cocycle condition written out term by term: for a direction
/// Lambda1 (dim L x dim H), the residual LHS - RHS of the first-order
/// embedding tensor identity on every ordered triple, stacked.
Vector first_order_residual(const EmbeddingTensorProblem& p, const Matrix& lambda1);

/// u -> Lambda rho(a1,a2) u - [a1,a2,Lambda u]_L as a dim L x dim H matrix.
Matrix degree0_coboundary(const EmbeddingTensorProblem& p, const Vector& a1, const Vector& a2);

/// Matrix whose columns are the flattened residuals of the basis directions.
Matrix first_order_matrix(const EmbeddingTensorProblem& p);
/// Matrix whose columns are the degree-0 coboundaries of basis pairs a<b.
Matrix degree0_matrix(const EmbeddingTensorProblem& p);

/// Column-major flattening used by the matrices above: entry (r,c) at c*rows+r.
Vector flatten(const Matrix& m);

}  // namespace tf_test
