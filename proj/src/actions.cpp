#include "tensorforge/actions.hpp"

namespace tensorforge {

EmbeddingTensorProblem EmbeddingTensorProblem::with_lambda(const Matrix& m) const {
  return EmbeddingTensorProblem{action, LinearMap(lambda.source, lambda.target, m)};
}

PairAction adjoint_action(const ThreeLieAlgebra& a) {
  const std::size_t n = a.space.dim();
  PairAction ad(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix op(n, n);
      for (std::size_t k = 0; k < n; ++k) op.set_column(k, a.bracket.at(i, j, k));
      ad.set(i, j, op);
    }
  return ad;
}

Matrix rho_left(const PairAction& rho, const Vector& x, std::size_t j) {
  Matrix out(rho.target_dim(), rho.target_dim());
  for (std::size_t i = 0; i < rho.source_dim(); ++i)
    if (!x[i].is_zero() && i != j) out.axpy(x[i], rho.at(i, j));
  return out;
}

Matrix rho_right(const PairAction& rho, std::size_t i, const Vector& y) {
  Matrix out(rho.target_dim(), rho.target_dim());
  for (std::size_t j = 0; j < rho.source_dim(); ++j)
    if (!y[j].is_zero() && i != j) out.axpy(y[j], rho.at(i, j));
  return out;
}

namespace {

std::vector<std::string> mixed_labels(const Space& l, std::initializer_list<std::size_t> li, const Space& h,
                                      std::initializer_list<std::size_t> hi) {
  auto out = tuple_labels(l, li);
  for (auto& s : tuple_labels(h, hi)) out.push_back(std::move(s));
  return out;
}

void check_shapes(const RepresentationData& r) {
  if (r.rho.source_dim() != r.algebra.space.dim() || r.rho.target_dim() != r.carrier.dim())
    throw InputError("pair action does not match the spaces " + r.algebra.space.name + " and " + r.carrier.name);
}

void check_shapes(const EmbeddingTensorProblem& p) {
  check_shapes(p.action.rep);
  if (p.lambda.source.dim() != p.H().dim() || p.lambda.target.dim() != p.L().space.dim())
    throw InputError("tensor must map " + p.H().name + " to " + p.L().space.name);
}

// Columns Lambda e_i.
std::vector<Vector> lambda_images(const EmbeddingTensorProblem& p) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < p.H().dim(); ++i) out.push_back(p.lambda.image_of_basis(i));
  return out;
}

// rho(Lambda e_i, Lambda e_j) for all ordered pairs, row-major.
std::vector<Matrix> rho_on_images(const EmbeddingTensorProblem& p, const std::vector<Vector>& img) {
  const std::size_t n = img.size();
  std::vector<Matrix> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(p.rho().eval(img[i], img[j]));
  return out;
}

void add_representation_checks(Report& report, const RepresentationData& r, const CheckOptions& opts) {
  const Space& L = r.algebra.space;
  const PairAction& rho = r.rho;
  const TrilinearTable& b = r.algebra.bracket.as_general();
  const std::size_t n = L.dim();
  CheckRecorder first("representation law on brackets in the first slot",
                      "rho([x1,x2,x3],x4) = rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4) + rho(x1,x2)rho(x3,x4)",
                      opts);
  CheckRecorder second("representation law on commutators",
                       "rho(x1,x2)rho(x3,x4) = rho(x3,x4)rho(x1,x2) + rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4])",
                       opts);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t bb = 0; bb < n; ++bb)
        for (std::size_t d = 0; d < n; ++d) {
          // Tuple order in the report is (a, bb, c, d).
          auto args = tuple_labels(L, {a, bb, c, d});
          Matrix bracket_first = rho_left(rho, b.at(a, bb, c), d);
          Matrix rhs1 = rho.at(bb, c) * rho.at(a, d);
          rhs1 += rho.at(c, a) * rho.at(bb, d);
          rhs1 += rho.at(a, bb) * rho.at(c, d);
          first.record_matrices(args, bracket_first, rhs1);

          Matrix lhs2 = rho.at(a, bb) * rho.at(c, d);
          Matrix rhs2 = rho.at(c, d) * rho.at(a, bb);
          rhs2 += bracket_first;
          rhs2 += rho_right(rho, c, b.at(a, bb, d));
          second.record_matrices(std::move(args), lhs2, rhs2);
        }
  report.add(std::move(first).finish());
  report.add(std::move(second).finish());
}

}  // namespace

Report check_representation(const RepresentationData& r, const CheckOptions& opts) {
  check_shapes(r);
  Report report("representation of " + r.algebra.space.name + " on " + r.carrier.name);
  Report base = check_3lie(r.algebra, opts);
  if (!base.passed()) {
    report.append(base);
    report.refuse(r.algebra.space.name + " is not a 3-Lie algebra");
    return report;
  }
  add_representation_checks(report, r, opts);
  return report;
}

Report check_coherent_action(const CoherentActionData& c, const CheckOptions& opts) {
  const RepresentationData& r = c.rep;
  check_shapes(r);
  Report report("coherent action of " + r.algebra.space.name + " on " + r.carrier.name);
  Report base_l = check_3lie(r.algebra, opts);
  Report base_h = check_3lie(c.target(), opts);
  if (!base_l.passed() || !base_h.passed()) {
    report.append(base_l);
    report.append(base_h);
    report.refuse(std::string(base_l.passed() ? r.carrier.name : r.algebra.space.name) + " is not a 3-Lie algebra");
    return report;
  }
  add_representation_checks(report, r, opts);

  const Space& L = r.algebra.space;
  const Space& H = r.carrier;
  const TrilinearTable& hb = c.target_bracket.as_general();
  const std::size_t n = L.dim(), m = H.dim();
  const Vector zero(m);
  CheckRecorder deriv("action by derivations",
                      "rho(x1,x2)[y1,y2,y3] = [rho(x1,x2)y1,y2,y3] + [y1,rho(x1,x2)y2,y3] + [y1,y2,rho(x1,x2)y3]",
                      opts);
  CheckRecorder annih("action lands in the annihilator", "[rho(x1,x2)y1,y2,y3] = 0", opts);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix& D = r.rho.at(i, j);
      std::vector<Vector> cols;
      for (std::size_t p = 0; p < m; ++p) cols.push_back(D.column(p));
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
          for (std::size_t s = 0; s < m; ++s) {
            auto args = mixed_labels(L, {i, j}, H, {p, q, s});
            Vector first = hb.eval1(cols[p], q, s);
            Vector rhs = first;
            rhs += hb.eval2(p, cols[q], s);
            rhs += hb.eval3(p, q, cols[s]);
            deriv.record_vectors(args, D * hb.at(p, q, s), rhs, H);
            annih.record_vectors(std::move(args), first, zero, H);
          }
    }
  report.add(std::move(deriv).finish());
  report.add(std::move(annih).finish());
  return report;
}

Space hemisemidirect_space(const CoherentActionData& c) {
  return direct_sum(c.rep.algebra.space, c.rep.carrier, c.rep.algebra.space.name + "+" + c.rep.carrier.name);
}

ThreeLeibnizAlgebra build_hemisemidirect(const CoherentActionData& c) {
  check_shapes(c.rep);
  Space s = hemisemidirect_space(c);
  const std::size_t n = c.rep.algebra.space.dim(), m = c.rep.carrier.dim(), d = n + m;
  TrilinearTable t(d, d);
  const TrilinearTable& lb = c.rep.algebra.bracket.as_general();
  const TrilinearTable& hb = c.target_bracket.as_general();
  auto embed = [&](const Vector& v, std::size_t offset) {
    Vector out(d);
    for (std::size_t i = 0; i < v.dim(); ++i) out[offset + i] = v[i];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        if (!lb.at(i, j, k).is_zero()) t.set(i, j, k, embed(lb.at(i, j, k), 0));
      if (i == j) continue;
      for (std::size_t h = 0; h < m; ++h) {
        Vector v = c.rep.rho.at(i, j).column(h);
        if (!v.is_zero()) t.set(i, j, n + h, embed(v, n));
      }
    }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r)
        if (!hb.at(p, q, r).is_zero()) t.set(n + p, n + q, n + r, embed(hb.at(p, q, r), n));
  return ThreeLeibnizAlgebra{std::move(s), std::move(t)};
}

ThreeLeibnizAlgebra hemisemidirect(const CoherentActionData& c) {
  require(check_coherent_action(c), "hemisemidirect product needs a coherent action");
  return build_hemisemidirect(c);
}

Report check_net(const EmbeddingTensorProblem& p, TripleMode mode, const CheckOptions& opts) {
  check_shapes(p);
  Report report("embedding tensor " + p.H().name + " -> " + p.L().space.name);
  Report base = check_coherent_action(p.action, opts);
  if (!base.passed()) {
    report.append(base);
    report.refuse("the action is not coherent");
    return report;
  }
  const bool inc = mode == TripleMode::increasing;
  CheckRecorder rec(inc ? "embedding tensor identity (increasing triples)" : "embedding tensor identity",
                    "[Ly1,Ly2,Ly3]_L = L(rho(Ly1,Ly2)y3 + [y1,y2,y3]_H)", opts);
  const auto img = lambda_images(p);
  const auto rho_img = rho_on_images(p, img);
  const TrilinearTable& lb = p.L().bracket.as_general();
  const std::size_t m = p.H().dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = inc ? i + 1 : 0; j < m; ++j)
      for (std::size_t k = inc ? j + 1 : 0; k < m; ++k) {
        Vector inner = rho_img[i * m + j].column(k);
        inner += p.H_bracket().at(i, j, k);
        rec.record_vectors(tuple_labels(p.H(), {i, j, k}), lb.eval(img[i], img[j], img[k]), p.lambda.apply(inner),
                           p.L().space);
      }
  report.add(std::move(rec).finish());
  return report;
}

Report graph_check(const EmbeddingTensorProblem& p, const CheckOptions& opts) {
  check_shapes(p);
  Report report("graph of " + p.H().name + " -> " + p.L().space.name);
  Report base = check_coherent_action(p.action, opts);
  if (!base.passed()) {
    report.append(base);
    report.refuse("the action is not coherent");
    return report;
  }
  ThreeLeibnizAlgebra semi = build_hemisemidirect(p.action);
  const std::size_t n = p.L().space.dim(), m = p.H().dim();
  auto graph_point = [&](const Vector& h) {
    Vector out(n + m);
    Vector l = p.lambda.apply(h);
    for (std::size_t i = 0; i < n; ++i) out[i] = l[i];
    for (std::size_t i = 0; i < m; ++i) out[n + i] = h[i];
    return out;
  };
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < m; ++i) basis.push_back(graph_point(Vector::unit(m, i)));
  CheckRecorder rec("graph closed under the hemisemidirect bracket",
                    "[Ly1+y1, Ly2+y2, Ly3+y3] = Lz + z for z its H-part", opts);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector b = semi.bracket.eval(basis[i], basis[j], basis[k]);
        Vector z(m);
        for (std::size_t t = 0; t < m; ++t) z[t] = b[n + t];
        rec.record_vectors(tuple_labels(p.H(), {i, j, k}), b, graph_point(z), semi.space);
      }
  report.add(std::move(rec).finish());
  return report;
}

TrilinearTable descendent_bracket(const EmbeddingTensorProblem& p) {
  TrilinearTable t = induced_braces(p);
  const std::size_t m = p.H().dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) t.add(i, j, k, p.H_bracket().at(i, j, k));
  return t;
}

TrilinearTable induced_braces(const EmbeddingTensorProblem& p) {
  check_shapes(p);
  const auto img = lambda_images(p);
  const auto rho_img = rho_on_images(p, img);
  const std::size_t m = p.H().dim();
  TrilinearTable t(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) t.set(i, j, k, rho_img[i * m + j].column(k));
  return t;
}

ThreeLeibnizAlgebra descendent(const EmbeddingTensorProblem& p) {
  require(check_net(p), "descendent bracket needs an embedding tensor");
  return ThreeLeibnizAlgebra{p.H(), descendent_bracket(p)};
}

ThreeLeibnizLieAlgebra induced_3ll(const EmbeddingTensorProblem& p) {
  require(check_net(p), "induced braces need an embedding tensor");
  return ThreeLeibnizLieAlgebra{p.action.target(), induced_braces(p)};
}

Report check_descendent_hom(const EmbeddingTensorProblem& p, const CheckOptions& opts) {
  check_shapes(p);
  Report report("tensor " + p.H().name + " -> " + p.L().space.name + " on descendent brackets");
  CheckRecorder rec("tensor preserves the descendent bracket", "L[y1,y2,y3]_desc = [Ly1,Ly2,Ly3]_L", opts);
  const TrilinearTable d = descendent_bracket(p);
  const auto img = lambda_images(p);
  const TrilinearTable& lb = p.L().bracket.as_general();
  const std::size_t m = p.H().dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        rec.record_vectors(tuple_labels(p.H(), {i, j, k}), p.lambda.apply(d.at(i, j, k)),
                           lb.eval(img[i], img[j], img[k]), p.L().space);
  report.add(std::move(rec).finish());
  return report;
}

Report check_net_hom(const NetHomomorphism& h, const CheckOptions& opts) {
  const EmbeddingTensorProblem& s = h.source;
  const EmbeddingTensorProblem& t = h.target;
  check_shapes(s);
  check_shapes(t);
  const std::size_t n = s.L().space.dim(), m = s.H().dim();
  if (t.L().space.dim() != n || t.H().dim() != m || h.f_L.source.dim() != n || h.f_L.target.dim() != n ||
      h.f_H.source.dim() != m || h.f_H.target.dim() != m)
    throw InputError("homomorphism maps do not match the two embedding tensors");

  Report report("embedding tensor homomorphism");
  const char* pre_names[] = {"source tensor", "target tensor", "f_L", "f_H"};
  Report pre[] = {check_net(s, TripleMode::all, opts), check_net(t, TripleMode::all, opts),
                  check_hom(h.f_L, s.L(), t.L(), opts),
                  check_hom(h.f_H, s.action.target(), t.action.target(), opts)};
  for (std::size_t i = 0; i < 4; ++i)
    if (!pre[i].passed()) {
      report.append(pre[i]);
      report.refuse(std::string(pre_names[i]) + " fails its precondition");
    }
  if (report.refused()) return report;

  CheckRecorder intertwine("maps intertwine the tensors", "L2 f_H y = f_L L1 y", opts);
  for (std::size_t i = 0; i < m; ++i)
    intertwine.record_vectors(tuple_labels(s.H(), {i}), t.lambda.apply(h.f_H.image_of_basis(i)),
                              h.f_L.apply(s.lambda.image_of_basis(i)), s.L().space);
  report.add(std::move(intertwine).finish());

  CheckRecorder equivariant("f_H is equivariant", "f_H rho(x1,x2) y = rho(f_L x1, f_L x2) f_H y", opts);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix moved = t.rho().eval(h.f_L.image_of_basis(i), h.f_L.image_of_basis(j));
      for (std::size_t k = 0; k < m; ++k)
        equivariant.record_vectors(mixed_labels(s.L().space, {i, j}, s.H(), {k}),
                                   h.f_H.apply(s.rho().at(i, j).column(k)), moved * h.f_H.image_of_basis(k),
                                   s.H());
    }
  report.add(std::move(equivariant).finish());

  if (report.passed()) {
    ThreeLeibnizAlgebra d1{s.H(), descendent_bracket(s)}, d2{t.H(), descendent_bracket(t)};
    const Report dh = check_hom(h.f_H, d1, d2, opts);
    for (CheckResult c : dh.checks()) {
      c.name = "consequence: f_H preserves the descendent bracket";
      report.add(std::move(c));
    }
    ThreeLeibnizLieAlgebra b1{s.action.target(), induced_braces(s)}, b2{t.action.target(), induced_braces(t)};
    const Report bh = check_hom(h.f_H, b1, b2, opts);
    for (CheckResult c : bh.checks())
      if (c.name == "preserves the braces") {
        c.name = "consequence: f_H preserves the induced braces";
        report.add(std::move(c));
      }
  }
  const bool iso = inverse(h.f_L.matrix).has_value() && inverse(h.f_H.matrix).has_value();
  report.note(iso ? "both maps are invertible: an isomorphism" : "not an isomorphism: a map is singular");
  return report;
}

}  // namespace tensorforge
