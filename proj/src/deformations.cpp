#include "tensorforge/deformations.hpp"

namespace tensorforge {

namespace {

void check_direction_shape(const Deformation& d) {
  const EmbeddingTensorProblem& p = d.base;
  if (d.direction.matrix.rows() != p.L().space.dim() || d.direction.matrix.cols() != p.H().dim())
    throw InputError("deformation direction must be a map " + p.H().name + " -> " + p.L().space.name + " (" +
                     std::to_string(p.L().space.dim()) + "x" + std::to_string(p.H().dim()) + ")");
}

// Returns the refusing report, or nullopt when the base is an embedding tensor.
std::optional<Report> gate(const Deformation& d, const std::string& subject, const CheckOptions& opts) {
  check_direction_shape(d);
  Report base = check_net(d.base, TripleMode::all, opts);
  if (base.passed()) return std::nullopt;
  Report r(subject);
  r.append(base);
  r.refuse("the base map is not an embedding tensor");
  return r;
}

struct Images {
  std::vector<Vector> lam, dir;
};

Images images(const Deformation& d) {
  Images im;
  for (std::size_t i = 0; i < d.base.H().dim(); ++i) {
    im.lam.push_back(d.base.lambda.image_of_basis(i));
    im.dir.push_back(d.direction.image_of_basis(i));
  }
  return im;
}

bool same_base(const EmbeddingTensorProblem& a, const EmbeddingTensorProblem& b) {
  return a.L().space == b.L().space && a.L().bracket == b.L().bracket && a.H() == b.H() && a.rho() == b.rho() &&
         a.action.target_bracket == b.action.target_bracket && a.lambda.matrix == b.lambda.matrix;
}

}  // namespace

Report check_infinitesimal(const Deformation& d, const CheckOptions& opts) {
  const std::string subject = "infinitesimal deformation of " + d.base.H().name + " -> " + d.base.L().space.name;
  if (auto refused = gate(d, subject, opts)) return *refused;
  const EmbeddingTensorProblem& p = d.base;
  Report report(subject);
  const Images im = images(d);
  const TrilinearTable& lb = p.L().bracket.as_general();
  const TrilinearTable& hb = p.H_bracket();
  const Space& L = p.L().space;
  const std::size_t m = p.H().dim();

  const CochainComplex cx = CochainComplex::unchecked(p);
  const Cochain phi = Cochain::from_map(d.direction.matrix);
  const Cochain dphi = delta(cx.rep(), phi);
  const WedgePairBasis wp(m);

  CheckRecorder direct("first-order embedding tensor identity",
                       "[L1y1,Ly2,Ly3] + [Ly1,L1y2,Ly3] + [Ly1,Ly2,L1y3] = L1 rho(Ly1,Ly2)y3 + "
                       "L rho(L1y1,Ly2)y3 + L rho(Ly1,L1y2)y3 + L1[y1,y2,y3]_H",
                       opts);
  CheckRecorder agree("residual equals the coboundary of the direction",
                      "lhs - rhs of the first-order identity = (delta L1)(y1,y2,y3)", opts);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector ek = Vector::unit(m, k);
        Vector lhs = lb.eval(im.dir[i], im.lam[j], im.lam[k]);
        lhs += lb.eval(im.lam[i], im.dir[j], im.lam[k]);
        lhs += lb.eval(im.lam[i], im.lam[j], im.dir[k]);
        Vector rhs = d.direction.apply(p.rho().apply(im.lam[i], im.lam[j], ek));
        rhs += p.lambda.apply(p.rho().apply(im.dir[i], im.lam[j], ek));
        rhs += p.lambda.apply(p.rho().apply(im.lam[i], im.dir[j], ek));
        rhs += d.direction.apply(hb.at(i, j, k));
        auto args = tuple_labels(p.H(), {i, j, k});
        direct.record_vectors(args, lhs, rhs, L);
        Vector cob(L.dim());
        if (i != j) {
          std::size_t q = wp.index_of(std::min(i, j), std::max(i, j));
          cob = dphi.eval({Vector::unit(wp.size(), q)}, ek);
          if (i > j) cob *= Scalar(-1);
        }
        agree.record_vectors(std::move(args), lhs - rhs, cob, L);
      }
  CheckResult direct_result = std::move(direct).finish();
  const bool direct_ok = direct_result.passed();
  report.add(std::move(direct_result));

  const Matrix& d1 = cx.matrix(1);
  const bool matrix_ok = (d1 * phi.coords).is_zero();
  CheckResult m_result;
  m_result.name = "direction is a 1-cocycle";
  m_result.identity = "delta_1 vec(L1) = 0";
  m_result.tuples = 1;
  m_result.failure_count = matrix_ok ? 0 : 1;
  report.add(std::move(m_result));
  report.add(std::move(agree).finish());

  CheckResult verdicts;
  verdicts.name = "direct and matrix verdicts agree";
  verdicts.identity = "first-order identity holds <=> delta_1 vec(L1) = 0";
  verdicts.tuples = 1;
  verdicts.failure_count = direct_ok == matrix_ok ? 0 : 1;
  report.add(std::move(verdicts));
  report.note(std::string("direct evaluation: ") + (direct_ok ? "pass" : "fail") +
              "; matrix test: " + (matrix_ok ? "pass" : "fail"));
  return report;
}

Report check_higher_order(const Deformation& d, const CheckOptions& opts) {
  const std::string subject = "higher-order conditions for " + d.base.H().name + " -> " + d.base.L().space.name;
  if (auto refused = gate(d, subject, opts)) return *refused;
  const EmbeddingTensorProblem& p = d.base;
  Report report(subject);
  const Images im = images(d);
  const TrilinearTable& lb = p.L().bracket.as_general();
  const std::size_t m = p.H().dim();
  CheckRecorder quad("second-order condition",
                     "[L1y1,L1y2,Ly3] + [L1y1,Ly2,L1y3] + [Ly1,L1y2,L1y3] = L1 rho(L1y1,Ly2)y3 + "
                     "L1 rho(Ly1,L1y2)y3 + L rho(L1y1,L1y2)y3",
                     opts);
  CheckRecorder cubic("direction is an embedding tensor for rho", "[L1y1,L1y2,L1y3] = L1 rho(L1y1,L1y2)y3", opts);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector ek = Vector::unit(m, k);
        auto args = tuple_labels(p.H(), {i, j, k});
        Vector lhs = lb.eval(im.dir[i], im.dir[j], im.lam[k]);
        lhs += lb.eval(im.dir[i], im.lam[j], im.dir[k]);
        lhs += lb.eval(im.lam[i], im.dir[j], im.dir[k]);
        Vector rhs = d.direction.apply(p.rho().apply(im.dir[i], im.lam[j], ek));
        rhs += d.direction.apply(p.rho().apply(im.lam[i], im.dir[j], ek));
        rhs += p.lambda.apply(p.rho().apply(im.dir[i], im.dir[j], ek));
        quad.record_vectors(args, lhs, rhs, p.L().space);
        cubic.record_vectors(std::move(args), lb.eval(im.dir[i], im.dir[j], im.dir[k]),
                             d.direction.apply(p.rho().apply(im.dir[i], im.dir[j], ek)), p.L().space);
      }
  report.add(std::move(quad).finish());
  report.add(std::move(cubic).finish());
  return report;
}

std::optional<std::pair<Vector, Vector>> factor_bivector(const Vector& omega, std::size_t n) {
  const WedgePairBasis wp(n);
  if (omega.dim() != wp.size()) throw InputError("bivector has the wrong number of coordinates");
  if (omega.is_zero()) return std::make_pair(Vector(n), Vector(n));
  std::size_t q = 0;
  while (omega[q].is_zero()) ++q;
  auto [i, j] = wp.pair(q);
  // Contraction with the dual basis vector at index s.
  auto contract = [&](std::size_t s) {
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == s) continue;
      out[k] = s < k ? omega[wp.index_of(s, k)] : -omega[wp.index_of(k, s)];
    }
    return out;
  };
  Vector a1 = contract(i), a2 = contract(j);
  Scalar inv = Scalar(1) / omega[q];
  a1 *= inv;
  if (wedge_expand(wp, a1, a2) != omega) return std::nullopt;
  return std::make_pair(std::move(a1), std::move(a2));
}

std::optional<EquivalenceWitness> are_equivalent(const Deformation& d1, const Deformation& d2) {
  check_direction_shape(d1);
  check_direction_shape(d2);
  if (!same_base(d1.base, d2.base)) throw InputError("deformations have different base embedding tensors");
  for (const Deformation* d : {&d1, &d2}) require(check_infinitesimal(*d), "equivalence needs two 1-cocycles");

  const EmbeddingTensorProblem& p = d1.base;
  const CochainComplex cx = CochainComplex::unchecked(p);
  const Matrix diff = d1.direction.matrix - d2.direction.matrix;
  auto sol = solve_membership(cx.matrix(0), Cochain::from_map(diff).coords);
  if (!sol) return std::nullopt;

  const std::size_t n = p.L().space.dim(), m = p.H().dim();
  const WedgePairBasis wl(n);
  EquivalenceWitness w{*sol, factor_bivector(*sol, n), Report("equivalence witness")};

  Matrix cob(n, m), ad(n, n), rho_w(m, m);
  for (std::size_t q = 0; q < wl.size(); ++q) {
    if ((*sol)[q].is_zero()) continue;
    auto [a, b] = wl.pair(q);
    const Vector ea = Vector::unit(n, a), eb = Vector::unit(n, b);
    cob.axpy((*sol)[q], cx.delta0(ea, eb).as_map());
    rho_w.axpy((*sol)[q], p.rho().at(a, b));
    Matrix adq(n, n);
    for (std::size_t c = 0; c < n; ++c) adq.set_column(c, p.L().bracket.at(a, b, c));
    ad.axpy((*sol)[q], adq);
  }

  CheckRecorder rel("coboundary relation", "L1 u - L1' u = delta0(omega) u", {std::nullopt});
  for (std::size_t u = 0; u < m; ++u)
    rel.record_vectors(tuple_labels(p.H(), {u}), diff.column(u), cob.column(u), p.L().space);
  w.report.add(std::move(rel).finish());

  const TrilinearTable& lb = p.L().bracket.as_general();
  const TrilinearTable& hb = p.H_bracket();
  CheckRecorder der_l("ad(omega) is a derivation of " + p.L().space.name,
                      "D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz]", {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector rhs = lb.eval(ad.column(i), Vector::unit(n, j), Vector::unit(n, k));
        rhs += lb.eval(Vector::unit(n, i), ad.column(j), Vector::unit(n, k));
        rhs += lb.eval(Vector::unit(n, i), Vector::unit(n, j), ad.column(k));
        der_l.record_vectors(tuple_labels(p.L().space, {i, j, k}), ad * lb.at(i, j, k), rhs, p.L().space);
      }
  CheckRecorder der_h("rho(omega) is a derivation of " + p.H().name, "D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz]",
                      {});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Vector rhs = hb.eval(rho_w.column(i), Vector::unit(m, j), Vector::unit(m, k));
        rhs += hb.eval(Vector::unit(m, i), rho_w.column(j), Vector::unit(m, k));
        rhs += hb.eval(Vector::unit(m, i), Vector::unit(m, j), rho_w.column(k));
        der_h.record_vectors(tuple_labels(p.H(), {i, j, k}), rho_w * hb.at(i, j, k), rhs, p.H());
      }
  CheckRecorder compat("first-order compatibility of the pair with rho",
                       "rho(omega) rho(a,b) = rho(ad(omega)a, b) + rho(a, ad(omega)b) + rho(a,b) rho(omega)", {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix rhs = rho_left(p.rho(), ad.column(a), b);
      rhs += rho_right(p.rho(), a, ad.column(b));
      rhs += p.rho().at(a, b) * rho_w;
      compat.record_matrices(tuple_labels(p.L().space, {a, b}), rho_w * p.rho().at(a, b), rhs);
    }
  w.report.add(std::move(der_l).finish());
  w.report.add(std::move(der_h).finish());
  w.report.add(std::move(compat).finish());
  w.report.note(w.factors ? "omega is decomposable" : "omega is not decomposable; only the bivector is reported");
  return w;
}

Classification classify(const EmbeddingTensorProblem& p) {
  require(check_net(p), "classification needs an embedding tensor");
  const CochainComplex cx = CochainComplex::unchecked(p);
  Classification c;
  c.dims = cx.dims(1);
  const Matrix& d0 = cx.matrix(0);
  std::vector<Vector> vecs;
  for (std::size_t q = 0; q < d0.cols(); ++q) vecs.push_back(d0.column(q));
  const std::size_t nb = vecs.size();
  for (Vector& k : kernel_basis(cx.matrix(1))) vecs.push_back(std::move(k));
  const std::size_t h = p.H().dim(), l = p.L().space.dim();
  for (std::size_t idx : independent_subset(vecs, cx.cochain_dim(1))) {
    if (idx < nb) continue;
    Cochain co{1, h, l, vecs[idx]};
    c.representatives.emplace_back(p.H(), p.L().space, co.as_map());
  }
  return c;
}

}  // namespace tensorforge
