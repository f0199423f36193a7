#pragma once

#include "tensorforge/report.hpp"

namespace tensorforge {

/// Alternating ternary bracket satisfying the fundamental identity.
struct ThreeLieAlgebra {
  Space space;
  AlternatingTrilinearTable bracket;

  static ThreeLieAlgebra abelian(Space s);
};

/// Ternary bracket with no symmetry assumed.
struct ThreeLeibnizAlgebra {
  Space space;
  TrilinearTable bracket;
};

struct LieAlgebra {
  Space space;
  AlternatingBilinearTable bracket;

  static LieAlgebra abelian(Space s);
};

/// Lie algebra with an extra binary product (the triangle product).
struct LeibnizLieAlgebra {
  LieAlgebra lie;
  BilinearTable triangle;
};

/// 3-Lie algebra together with a general ternary product {-,-,-}.
struct ThreeLeibnizLieAlgebra {
  ThreeLieAlgebra lie3;
  TrilinearTable braces;
};

struct LinearMap {
  Space source;
  Space target;
  Matrix matrix;  // dim(target) x dim(source)

  LinearMap() = default;
  LinearMap(Space source, Space target, Matrix matrix);
  static LinearMap identity(const Space& s);
  static LinearMap zero(const Space& source, const Space& target);

  Vector apply(const Vector& v) const { return matrix * v; }
  Vector image_of_basis(std::size_t i) const { return matrix.column(i); }
};

std::vector<std::string> tuple_labels(const Space& s, std::initializer_list<std::size_t> idx);

/// Fundamental identity on pairs i<j times increasing triples p<q<r, which
/// is sound because both sides are skew in (l1,l2) and in (l3,l4,l5).
Report check_3lie(const ThreeLieAlgebra& a, const CheckOptions& opts = {});

/// Fundamental identity on every ordered basis 5-tuple.
Report check_3leibniz(const ThreeLeibnizAlgebra& a, const CheckOptions& opts = {});

/// Jacobi identity on increasing triples.
Report check_lie(const LieAlgebra& a, const CheckOptions& opts = {});

Report check_leibniz_lie(const LeibnizLieAlgebra& a, const CheckOptions& opts = {});

/// Compatibility of {-,-,-} with itself and with the 3-Lie bracket, plus the
/// two vanishing laws, on every ordered 5-tuple. Braces are not assumed
/// skew. The report is refused when the 3-Lie part fails check_3lie.
Report check_3ll(const ThreeLeibnizLieAlgebra& a, const CheckOptions& opts = {});

/// <x,y,z> = [x,y,z] + {x,y,z}. Refuses (PreconditionError) unless the input
/// passes check_3lie and check_3ll.
ThreeLeibnizAlgebra subadjacent(const ThreeLeibnizLieAlgebra& a);

/// Sum of the bracket and braces without any precondition check.
TrilinearTable sum_bracket(const ThreeLeibnizLieAlgebra& a);

// Homomorphism checks. Each throws InputError when the map's spaces do not
// match the algebras.
Report check_hom(const LinearMap& f, const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst,
                 const CheckOptions& opts = {});
Report check_hom(const LinearMap& f, const ThreeLeibnizAlgebra& src, const ThreeLeibnizAlgebra& dst,
                 const CheckOptions& opts = {});
Report check_hom(const LinearMap& f, const ThreeLeibnizLieAlgebra& src, const ThreeLeibnizLieAlgebra& dst,
                 const CheckOptions& opts = {});
Report check_hom(const LinearMap& f, const LieAlgebra& src, const LieAlgebra& dst,
                 const CheckOptions& opts = {});

}  // namespace tensorforge
