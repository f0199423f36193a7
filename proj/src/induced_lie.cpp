#include "tensorforge/induced_lie.hpp"

namespace tensorforge {

namespace {

void check_trace_shape(const TraceMap& s, const Space& space) {
  if (s.coeffs.dim() != space.dim())
    throw InputError("trace map has " + std::to_string(s.coeffs.dim()) + " coefficients but " + space.name +
                     " has dimension " + std::to_string(space.dim()));
}

void check_action_shape(const LieCoherentAction& a) {
  const std::size_t n = a.lie_L.space.dim(), m = a.lie_H.space.dim();
  if (a.rho.size() != n) throw InputError("Lie action needs one operator per basis vector of " + a.lie_L.space.name);
  for (const Matrix& op : a.rho)
    if (op.rows() != m || op.cols() != m)
      throw InputError("Lie action operators must be " + std::to_string(m) + "x" + std::to_string(m));
}

Vector scalar_vector(const Scalar& s) { return Vector{s}; }

const Space& scalar_space() {
  static const Space k("K", {"1"});
  return k;
}

}  // namespace

Scalar TraceMap::operator()(const Vector& v) const {
  Scalar out;
  for (std::size_t i = 0; i < coeffs.dim(); ++i)
    if (!coeffs[i].is_zero()) out.add_product(coeffs[i], v[i]);
  return out;
}

Report check_trace(const TraceMap& s, const LieAlgebra& lie, const CheckOptions& opts) {
  check_trace_shape(s, lie.space);
  Report report("trace map on " + lie.space.name);
  CheckRecorder rec("trace vanishes on brackets", "s([x,y]) = 0", opts);
  const std::size_t n = lie.space.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rec.record_vectors(tuple_labels(lie.space, {i, j}), scalar_vector(s(lie.bracket.at(i, j))),
                         scalar_vector(Scalar()), scalar_space());
  report.add(std::move(rec).finish());
  return report;
}

Report check_trace(const TraceMap& s, const LeibnizLieAlgebra& a, const CheckOptions& opts) {
  Report report = check_trace(s, a.lie, opts);
  CheckRecorder rec("trace vanishes on triangle products", "s(x |> y) = 0", opts);
  const std::size_t n = a.lie.space.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rec.record_vectors(tuple_labels(a.lie.space, {i, j}), scalar_vector(s(a.triangle.at(i, j))),
                         scalar_vector(Scalar()), scalar_space());
  report.add(std::move(rec).finish());
  return report;
}

ThreeLieAlgebra build_threelie_from_lie(const LieAlgebra& lie, const TraceMap& s) {
  check_trace_shape(s, lie.space);
  const std::size_t n = lie.space.dim();
  AlternatingTrilinearTable t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector v(n);
        v.axpy(s.coeffs[i], lie.bracket.at(j, k));
        v.axpy(s.coeffs[j], lie.bracket.at(k, i));
        v.axpy(s.coeffs[k], lie.bracket.at(i, j));
        t.set(i, j, k, v);
      }
  return ThreeLieAlgebra{lie.space, std::move(t)};
}

ThreeLieAlgebra threelie_from_lie(const LieAlgebra& lie, const TraceMap& s) {
  require(check_lie(lie), lie.space.name + " is not a Lie algebra");
  require(check_trace(s, lie), "not a trace map on " + lie.space.name);
  return build_threelie_from_lie(lie, s);
}

Matrix LieCoherentAction::rho_of(const Vector& x) const {
  const std::size_t m = lie_H.space.dim();
  Matrix out(m, m);
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!x[i].is_zero()) out.axpy(x[i], rho[i]);
  return out;
}

Report check_lie_coherent(const LieCoherentAction& a, const CheckOptions& opts) {
  check_action_shape(a);
  Report report("Lie action of " + a.lie_L.space.name + " on " + a.lie_H.space.name);
  for (const LieAlgebra* alg : {&a.lie_L, &a.lie_H}) {
    Report r = check_lie(*alg, opts);
    if (!r.passed()) {
      report.append(r);
      report.refuse(alg->space.name + " is not a Lie algebra");
      return report;
    }
  }
  const std::size_t n = a.lie_L.space.dim(), m = a.lie_H.space.dim();
  const Space& L = a.lie_L.space;
  const Space& H = a.lie_H.space;
  const AlternatingBilinearTable& hb = a.lie_H.bracket;

  CheckRecorder hom("action is a Lie homomorphism", "rho([x,y]) = rho(x)rho(y) - rho(y)rho(x)", opts);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      hom.record_matrices(tuple_labels(L, {i, j}), a.rho_of(a.lie_L.bracket.at(i, j)),
                          a.rho[i] * a.rho[j] - a.rho[j] * a.rho[i]);
  CheckRecorder der("action by derivations", "rho(x)[h1,h2] = [rho(x)h1,h2] + [h1,rho(x)h2]", opts);
  CheckRecorder ann("action lands in the centre", "[rho(x)h1,h2] = 0", opts);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Vector ei = Vector::unit(m, i), ej = Vector::unit(m, j);
        std::vector<std::string> args{L.label(x), H.label(i), H.label(j)};
        const Vector ri = a.rho[x].column(i), rj = a.rho[x].column(j);
        if (i < j) der.record_vectors(args, a.rho[x] * hb.at(i, j), hb.eval(ri, ej) + hb.eval(ei, rj), H);
        ann.record_vectors(std::move(args), hb.eval(ri, ej), Vector(m), H);
      }
  report.add(std::move(hom).finish());
  report.add(std::move(der).finish());
  report.add(std::move(ann).finish());
  return report;
}

PairAction build_rho_sigma(const LieCoherentAction& a, const TraceMap& s_L) {
  check_action_shape(a);
  check_trace_shape(s_L, a.lie_L.space);
  const std::size_t n = a.lie_L.space.dim(), m = a.lie_H.space.dim();
  PairAction out(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix op(m, m);
      op.axpy(s_L.coeffs[i], a.rho[j]);
      op.axpy(-s_L.coeffs[j], a.rho[i]);
      out.set(i, j, op);
    }
  return out;
}

PairAction rho_sigma(const LieCoherentAction& a, const TraceMap& s_L) {
  require(check_lie_coherent(a), "not a coherent Lie action");
  require(check_trace(s_L, a.lie_L), "not a trace map on " + a.lie_L.space.name);
  return build_rho_sigma(a, s_L);
}

CoherentActionData build_sigma_action(const LieCoherentAction& a, const TraceMap& s_L, const TraceMap& s_H) {
  ThreeLieAlgebra L = build_threelie_from_lie(a.lie_L, s_L);
  ThreeLieAlgebra H = build_threelie_from_lie(a.lie_H, s_H);
  return CoherentActionData{RepresentationData{std::move(L), a.lie_H.space, build_rho_sigma(a, s_L)},
                            std::move(H.bracket)};
}

CoherentActionData sigma_action(const LieCoherentAction& a, const TraceMap& s_L, const TraceMap& s_H) {
  require(check_lie_coherent(a), "not a coherent Lie action");
  require(check_trace(s_L, a.lie_L), "not a trace map on " + a.lie_L.space.name);
  require(check_trace(s_H, a.lie_H), "not a trace map on " + a.lie_H.space.name);
  return build_sigma_action(a, s_L, s_H);
}

Report check_lie_net(const LieNet& n, const CheckOptions& opts) {
  const LieCoherentAction& a = n.action;
  const Space& L = a.lie_L.space;
  const Space& H = a.lie_H.space;
  if (n.lambda.matrix.rows() != L.dim() || n.lambda.matrix.cols() != H.dim())
    throw InputError("tensor must be a map " + H.name + " -> " + L.name);
  Report report("Lie embedding tensor " + H.name + " -> " + L.name);
  Report base = check_lie_coherent(a, opts);
  if (!base.passed()) {
    report.append(base);
    report.refuse("the Lie action is not coherent");
    return report;
  }
  const std::size_t m = H.dim();
  std::vector<Vector> img;
  for (std::size_t i = 0; i < m; ++i) img.push_back(n.lambda.image_of_basis(i));
  CheckRecorder rec("Lie embedding tensor identity", "[Lh1,Lh2]_L = L(rho(Lh1)h2 + [h1,h2]_H)", opts);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector inner = a.rho_of(img[i]).column(j);
      inner += a.lie_H.bracket.at(i, j);
      rec.record_vectors(tuple_labels(H, {i, j}), a.lie_L.bracket.eval(img[i], img[j]), n.lambda.apply(inner), L);
    }
  report.add(std::move(rec).finish());
  return report;
}

Report check_trace_compat(const LieNet& n, const TraceMap& s_L, const TraceMap& s_H, const CheckOptions& opts) {
  const Space& H = n.action.lie_H.space;
  check_trace_shape(s_L, n.action.lie_L.space);
  check_trace_shape(s_H, H);
  Report report("trace compatibility along " + H.name + " -> " + n.action.lie_L.space.name);
  CheckRecorder rec("traces agree along the tensor", "s_L(L h) = s_H(h)", opts);
  for (std::size_t i = 0; i < H.dim(); ++i)
    rec.record_vectors(tuple_labels(H, {i}), scalar_vector(s_L(n.lambda.image_of_basis(i))),
                       scalar_vector(s_H.coeffs[i]), scalar_space());
  report.add(std::move(rec).finish());
  return report;
}

EmbeddingTensorProblem build_lift(const LieNet& n, const TraceMap& s_L, const TraceMap& s_H) {
  return EmbeddingTensorProblem{build_sigma_action(n.action, s_L, s_H), n.lambda};
}

EmbeddingTensorProblem lift_net(const LieNet& n, const TraceMap& s_L, const TraceMap& s_H) {
  require(check_lie_net(n), "not a Lie embedding tensor");
  require(check_trace(s_L, n.action.lie_L), "not a trace map on " + n.action.lie_L.space.name);
  require(check_trace(s_H, n.action.lie_H), "not a trace map on " + n.action.lie_H.space.name);
  require(check_trace_compat(n, s_L, s_H), "trace maps are not compatible with the tensor");
  return build_lift(n, s_L, s_H);
}

ThreeLeibnizLieAlgebra build_three_ll(const LeibnizLieAlgebra& a, const TraceMap& s) {
  const std::size_t n = a.lie.space.dim();
  TrilinearTable braces(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector v(n);
        v.axpy(s.coeffs[i], a.triangle.at(j, k));
        v.axpy(-s.coeffs[j], a.triangle.at(i, k));
        braces.set(i, j, k, std::move(v));
      }
  return ThreeLeibnizLieAlgebra{build_threelie_from_lie(a.lie, s), std::move(braces)};
}

ThreeLeibnizLieAlgebra three_ll_from_leibniz_lie(const LeibnizLieAlgebra& a, const TraceMap& s) {
  require(check_leibniz_lie(a), a.lie.space.name + " is not a Leibniz-Lie algebra");
  require(check_trace(s, a), "not a trace map on " + a.lie.space.name);
  return build_three_ll(a, s);
}

}  // namespace tensorforge
