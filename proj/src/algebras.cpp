#include "tensorforge/algebras.hpp"

namespace tensorforge {

ThreeLieAlgebra ThreeLieAlgebra::abelian(Space s) {
  const std::size_t n = s.dim();
  return ThreeLieAlgebra{std::move(s), AlternatingTrilinearTable(n, n)};
}

LieAlgebra LieAlgebra::abelian(Space s) {
  const std::size_t n = s.dim();
  return LieAlgebra{std::move(s), AlternatingBilinearTable(n, n)};
}

LinearMap::LinearMap(Space src, Space dst, Matrix m)
    : source(std::move(src)), target(std::move(dst)), matrix(std::move(m)) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw InputError("linear map " + source.name + " -> " + target.name + " needs a " +
                     std::to_string(target.dim()) + "x" + std::to_string(source.dim()) + " matrix");
}

LinearMap LinearMap::identity(const Space& s) { return LinearMap(s, s, Matrix::identity(s.dim())); }

LinearMap LinearMap::zero(const Space& source, const Space& target) {
  return LinearMap(source, target, Matrix(target.dim(), source.dim()));
}

std::vector<std::string> tuple_labels(const Space& s, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(s.label(i));
  return out;
}

namespace {

const char* kFundamental = "[x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]";

// Both sides of the fundamental identity at basis (i,j,p,q,r).
void fundamental_sides(const TrilinearTable& t, std::size_t i, std::size_t j, std::size_t p, std::size_t q,
                       std::size_t r, Vector& lhs, Vector& rhs) {
  lhs = t.eval3(i, j, t.at(p, q, r));
  rhs = t.eval1(t.at(i, j, p), q, r);
  rhs += t.eval2(p, t.at(i, j, q), r);
  rhs += t.eval3(p, q, t.at(i, j, r));
}

Vector bracket2(const BilinearTable& t, const Vector& x, std::size_t j) {
  Vector out(t.codomain_dim());
  for (std::size_t i = 0; i < t.domain_dim(); ++i)
    if (!x[i].is_zero()) out.axpy(x[i], t.at(i, j));
  return out;
}

Vector bracket2(const BilinearTable& t, std::size_t i, const Vector& y) {
  Vector out(t.codomain_dim());
  for (std::size_t j = 0; j < t.domain_dim(); ++j)
    if (!y[j].is_zero()) out.axpy(y[j], t.at(i, j));
  return out;
}

void require_dims(const LinearMap& f, std::size_t src, std::size_t dst) {
  if (f.source.dim() != src || f.target.dim() != dst)
    throw InputError("map " + f.source.name + " -> " + f.target.name + " does not match the algebras' dimensions");
}

CheckResult hom_ternary(const LinearMap& f, const TrilinearTable& src, const TrilinearTable& dst,
                        const Space& src_space, bool increasing, const std::string& name,
                        const std::string& identity, const CheckOptions& opts) {
  CheckRecorder rec(name, identity, opts);
  const std::size_t n = src.domain_dim();
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(f.image_of_basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = increasing ? i + 1 : 0; j < n; ++j)
      for (std::size_t k = increasing ? j + 1 : 0; k < n; ++k)
        rec.record_vectors(tuple_labels(src_space, {i, j, k}), f.apply(src.at(i, j, k)),
                           dst.eval(img[i], img[j], img[k]), f.target);
  return std::move(rec).finish();
}

}  // namespace

Report check_3lie(const ThreeLieAlgebra& a, const CheckOptions& opts) {
  Report report("3-Lie algebra " + a.space.name);
  CheckRecorder rec("fundamental identity", kFundamental, opts);
  const TrilinearTable& t = a.bracket.as_general();
  const std::size_t n = a.space.dim();
  Vector lhs, rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          for (std::size_t r = q + 1; r < n; ++r) {
            fundamental_sides(t, i, j, p, q, r, lhs, rhs);
            rec.record_vectors(tuple_labels(a.space, {i, j, p, q, r}), lhs, rhs, a.space);
          }
  report.add(std::move(rec).finish());
  return report;
}

Report check_3leibniz(const ThreeLeibnizAlgebra& a, const CheckOptions& opts) {
  Report report("3-Leibniz algebra " + a.space.name);
  CheckRecorder rec("fundamental identity", kFundamental, opts);
  const std::size_t n = a.space.dim();
  Vector lhs, rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t r = 0; r < n; ++r) {
            fundamental_sides(a.bracket, i, j, p, q, r, lhs, rhs);
            rec.record_vectors(tuple_labels(a.space, {i, j, p, q, r}), lhs, rhs, a.space);
          }
  report.add(std::move(rec).finish());
  return report;
}

Report check_lie(const LieAlgebra& a, const CheckOptions& opts) {
  Report report("Lie algebra " + a.space.name);
  CheckRecorder rec("Jacobi identity", "[x1,[x2,x3]] + [x2,[x3,x1]] + [x3,[x1,x2]] = 0", opts);
  const BilinearTable& t = a.bracket.as_general();
  const std::size_t n = a.space.dim();
  const Vector zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector lhs = bracket2(t, i, t.at(j, k));
        lhs += bracket2(t, j, t.at(k, i));
        lhs += bracket2(t, k, t.at(i, j));
        rec.record_vectors(tuple_labels(a.space, {i, j, k}), lhs, zero, a.space);
      }
  report.add(std::move(rec).finish());
  return report;
}

Report check_leibniz_lie(const LeibnizLieAlgebra& a, const CheckOptions& opts) {
  const Space& s = a.lie.space;
  Report report("Leibniz-Lie algebra " + s.name);
  Report lie = check_lie(a.lie, opts);
  report.append(lie);
  const BilinearTable& br = a.lie.bracket.as_general();
  const BilinearTable& tr = a.triangle;
  const std::size_t n = s.dim();
  const Vector zero(n);
  CheckRecorder comp("triangle compatibility",
                     "x1>(x2>x3) = (x1>x2)>x3 + x2>(x1>x3) + [x1,x2]>x3", opts);
  CheckRecorder left("triangle kills brackets", "x1>[x2,x3] = 0", opts);
  CheckRecorder right("triangle lands in the centre", "[x1>x2,x3] = 0", opts);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto args = tuple_labels(s, {i, j, k});
        Vector lhs = bracket2(tr, i, tr.at(j, k));
        Vector rhs = bracket2(tr, tr.at(i, j), k);
        rhs += bracket2(tr, j, tr.at(i, k));
        rhs += bracket2(tr, br.at(i, j), k);
        comp.record_vectors(args, lhs, rhs, s);
        left.record_vectors(args, bracket2(tr, i, br.at(j, k)), zero, s);
        right.record_vectors(std::move(args), bracket2(br, tr.at(i, j), k), zero, s);
      }
  report.add(std::move(comp).finish());
  report.add(std::move(left).finish());
  report.add(std::move(right).finish());
  return report;
}

Report check_3ll(const ThreeLeibnizLieAlgebra& a, const CheckOptions& opts) {
  const Space& s = a.lie3.space;
  Report report("3-Leibniz-Lie algebra " + s.name);
  Report base = check_3lie(a.lie3, opts);
  report.append(base);
  if (!base.passed()) {
    report.refuse("the underlying bracket is not a 3-Lie algebra");
    return report;
  }
  const TrilinearTable& b = a.lie3.bracket.as_general();
  const TrilinearTable& c = a.braces;
  const std::size_t n = s.dim();
  const Vector zero(n);
  CheckRecorder comp("braces compatibility",
                     "{x1,x2,{x3,x4,x5}} = {{x1,x2,x3},x4,x5} + {x3,{x1,x2,x4},x5} + {x3,x4,{x1,x2,x5}}"
                     " + {[x1,x2,x3],x4,x5} + {x3,[x1,x2,x4],x5}",
                     opts);
  CheckRecorder left("braces kill brackets", "{x1,x2,[x3,x4,x5]} = 0", opts);
  CheckRecorder right("braces land in the centre", "[{x1,x2,x3},x4,x5] = 0", opts);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t r = 0; r < n; ++r) {
            auto args = tuple_labels(s, {i, j, p, q, r});
            Vector lhs, rhs;
            fundamental_sides(c, i, j, p, q, r, lhs, rhs);
            rhs += c.eval1(b.at(i, j, p), q, r);
            rhs += c.eval2(p, b.at(i, j, q), r);
            comp.record_vectors(args, lhs, rhs, s);
            left.record_vectors(args, c.eval3(i, j, b.at(p, q, r)), zero, s);
            right.record_vectors(std::move(args), b.eval1(c.at(i, j, p), q, r), zero, s);
          }
  report.add(std::move(comp).finish());
  report.add(std::move(left).finish());
  report.add(std::move(right).finish());
  return report;
}

TrilinearTable sum_bracket(const ThreeLeibnizLieAlgebra& a) {
  TrilinearTable out = a.braces;
  const TrilinearTable& b = a.lie3.bracket.as_general();
  const std::size_t n = b.domain_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!b.at(i, j, k).is_zero()) out.add(i, j, k, b.at(i, j, k));
  return out;
}

ThreeLeibnizAlgebra subadjacent(const ThreeLeibnizLieAlgebra& a) {
  require(check_3ll(a), "subadjacent bracket needs a 3-Leibniz-Lie algebra");
  return ThreeLeibnizAlgebra{a.lie3.space, sum_bracket(a)};
}

Report check_hom(const LinearMap& f, const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst,
                 const CheckOptions& opts) {
  require_dims(f, src.space.dim(), dst.space.dim());
  Report report("3-Lie homomorphism " + f.source.name + " -> " + f.target.name);
  report.add(hom_ternary(f, src.bracket.as_general(), dst.bracket.as_general(), src.space, true,
                         "preserves the 3-Lie bracket", "f[x1,x2,x3] = [f x1,f x2,f x3]", opts));
  return report;
}

Report check_hom(const LinearMap& f, const ThreeLeibnizAlgebra& src, const ThreeLeibnizAlgebra& dst,
                 const CheckOptions& opts) {
  require_dims(f, src.space.dim(), dst.space.dim());
  Report report("3-Leibniz homomorphism " + f.source.name + " -> " + f.target.name);
  report.add(hom_ternary(f, src.bracket, dst.bracket, src.space, false, "preserves the 3-Leibniz bracket",
                         "f[x1,x2,x3] = [f x1,f x2,f x3]", opts));
  return report;
}

Report check_hom(const LinearMap& f, const ThreeLeibnizLieAlgebra& src, const ThreeLeibnizLieAlgebra& dst,
                 const CheckOptions& opts) {
  require_dims(f, src.lie3.space.dim(), dst.lie3.space.dim());
  Report report("3-Leibniz-Lie homomorphism " + f.source.name + " -> " + f.target.name);
  report.add(hom_ternary(f, src.lie3.bracket.as_general(), dst.lie3.bracket.as_general(), src.lie3.space, true,
                         "preserves the 3-Lie bracket", "f[x1,x2,x3] = [f x1,f x2,f x3]", opts));
  report.add(hom_ternary(f, src.braces, dst.braces, src.lie3.space, false, "preserves the braces",
                         "f{x1,x2,x3} = {f x1,f x2,f x3}", opts));
  return report;
}

Report check_hom(const LinearMap& f, const LieAlgebra& src, const LieAlgebra& dst, const CheckOptions& opts) {
  require_dims(f, src.space.dim(), dst.space.dim());
  Report report("Lie homomorphism " + f.source.name + " -> " + f.target.name);
  CheckRecorder rec("preserves the Lie bracket", "f[x1,x2] = [f x1,f x2]", opts);
  const std::size_t n = src.space.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rec.record_vectors(tuple_labels(src.space, {i, j}), f.apply(src.bracket.at(i, j)),
                         dst.bracket.eval(f.image_of_basis(i), f.image_of_basis(j)), f.target);
  report.add(std::move(rec).finish());
  return report;
}

}  // namespace tensorforge
