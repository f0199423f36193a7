#include "tensorforge/cohomology.hpp"

#include <cstdlib>
#include <functional>

namespace tensorforge {

ThreeLeibnizRep ThreeLeibnizRep::zero(ThreeLeibnizAlgebra algebra, Space carrier) {
  const std::size_t n = algebra.space.dim(), v = carrier.dim();
  std::vector<Matrix> z(n * n, Matrix(v, v));
  return ThreeLeibnizRep{std::move(algebra), std::move(carrier), z, z, z};
}

Matrix ThreeLeibnizRep::eval_pair(const std::vector<Matrix>& table, const Vector& x, const Vector& y) const {
  const std::size_t n = dim(), v = carrier.dim();
  Matrix out(v, v);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (!y[b].is_zero()) out.axpy(x[a] * y[b], table[a * n + b]);
  }
  return out;
}

Report check_3leibniz_rep(const ThreeLeibnizRep& r, const CheckOptions& opts) {
  const Space& A = r.algebra.space;
  Report report("representation of " + A.name + " on " + r.carrier.name);
  Report base = check_3leibniz(r.algebra, opts);
  if (!base.passed()) {
    report.append(base);
    report.refuse(A.name + " is not a 3-Leibniz algebra");
    return report;
  }
  const TrilinearTable& b = r.algebra.bracket;
  const std::size_t n = A.dim();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(Vector::unit(n, i));

  CheckRecorder c1("left action law", "l(a1,a2,l(a3,a4,u)) = l([a1,a2,a3],a4,u) + l(a3,[a1,a2,a4],u) + l(a3,a4,l(a1,a2,u))",
                   opts);
  CheckRecorder c2("left on middle law",
                   "l(a1,a2,m(a3,u,a4)) = m([a1,a2,a3],u,a4) + m(a3,l(a1,a2,u),a4) + m(a3,u,[a1,a2,a4])", opts);
  CheckRecorder c3("left on right law",
                   "l(a1,a2,r(u,a3,a4)) = r(l(a1,a2,u),a3,a4) + r(u,[a1,a2,a3],a4) + r(u,a3,[a1,a2,a4])", opts);
  CheckRecorder c4("middle on brackets law",
                   "m(a1,u,[a2,a3,a4]) = r(m(a1,u,a2),a3,a4) + m(a2,m(a1,u,a3),a4) + l(a2,a3,m(a1,u,a4))", opts);
  CheckRecorder c5("right on brackets law",
                   "r(u,a1,[a2,a3,a4]) = r(r(u,a1,a2),a3,a4) + m(a2,r(u,a1,a3),a4) + l(a2,a3,r(u,a1,a4))", opts);
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t a3 = 0; a3 < n; ++a3)
        for (std::size_t a4 = 0; a4 < n; ++a4) {
          auto args = tuple_labels(A, {a1, a2, a3, a4});
          const Vector& b123 = b.at(a1, a2, a3);
          const Vector& b124 = b.at(a1, a2, a4);
          const Vector& b234 = b.at(a2, a3, a4);
          const Matrix& l12 = r.l(a1, a2);

          Matrix rhs = r.l_eval(b123, e[a4]);
          rhs += r.l_eval(e[a3], b124);
          rhs += r.l(a3, a4) * l12;
          c1.record_matrices(args, l12 * r.l(a3, a4), rhs);

          rhs = r.m_eval(b123, e[a4]);
          rhs += r.m(a3, a4) * l12;
          rhs += r.m_eval(e[a3], b124);
          c2.record_matrices(args, l12 * r.m(a3, a4), rhs);

          rhs = r.r(a3, a4) * l12;
          rhs += r.r_eval(b123, e[a4]);
          rhs += r.r_eval(e[a3], b124);
          c3.record_matrices(args, l12 * r.r(a3, a4), rhs);

          rhs = r.r(a3, a4) * r.m(a1, a2);
          rhs += r.m(a2, a4) * r.m(a1, a3);
          rhs += r.l(a2, a3) * r.m(a1, a4);
          c4.record_matrices(args, r.m_eval(e[a1], b234), rhs);

          rhs = r.r(a3, a4) * r.r(a1, a2);
          rhs += r.m(a2, a4) * r.r(a1, a3);
          rhs += r.l(a2, a3) * r.r(a1, a4);
          c5.record_matrices(std::move(args), r.r_eval(e[a1], b234), rhs);
        }
  for (CheckRecorder* c : {&c1, &c2, &c3, &c4, &c5}) report.add(std::move(*c).finish());
  return report;
}

ThreeLeibnizRep build_induced_rep(const EmbeddingTensorProblem& p) {
  const std::size_t m = p.H().dim(), n = p.L().space.dim();
  ThreeLeibnizAlgebra desc{p.H(), descendent_bracket(p)};
  ThreeLeibnizRep rep = ThreeLeibnizRep::zero(std::move(desc), p.L().space);
  const TrilinearTable& lb = p.L().bracket.as_general();
  std::vector<Vector> img, eh, el;
  for (std::size_t i = 0; i < m; ++i) img.push_back(p.lambda.image_of_basis(i));
  for (std::size_t i = 0; i < m; ++i) eh.push_back(Vector::unit(m, i));
  for (std::size_t i = 0; i < n; ++i) el.push_back(Vector::unit(n, i));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Matrix l(n, n), mid(n, n), r(n, n);
      for (std::size_t c = 0; c < n; ++c) {
        l.set_column(c, lb.eval(img[a], img[b], el[c]));
        mid.set_column(c, lb.eval(img[a], el[c], img[b]) - p.lambda.apply(p.rho().apply(img[a], el[c], eh[b])));
        r.set_column(c, lb.eval(el[c], img[a], img[b]) - p.lambda.apply(p.rho().apply(el[c], img[a], eh[b])));
      }
      rep.l_act[a * m + b] = std::move(l);
      rep.m_act[a * m + b] = std::move(mid);
      rep.r_act[a * m + b] = std::move(r);
    }
  return rep;
}

ThreeLeibnizRep induced_rep(const EmbeddingTensorProblem& p) {
  require(check_net(p), "induced representation needs an embedding tensor");
  return build_induced_rep(p);
}

// ---------------------------------------------------------------- cochains

std::size_t Cochain::dimension(std::size_t degree, std::size_t h_dim, std::size_t v_dim) {
  std::size_t d = h_dim * v_dim;
  const std::size_t pairs = h_dim * (h_dim - (h_dim ? 1 : 0)) / 2;
  for (std::size_t i = 1; i < degree; ++i) d *= pairs;
  return d;
}

Cochain Cochain::zero(std::size_t degree, std::size_t h_dim, std::size_t v_dim) {
  if (degree == 0) throw InputError("cochains start in degree 1");
  return Cochain{degree, h_dim, v_dim, Vector(dimension(degree, h_dim, v_dim))};
}

Cochain Cochain::from_map(const Matrix& m) {
  Cochain c = zero(1, m.cols(), m.rows());
  for (std::size_t h = 0; h < m.cols(); ++h)
    for (std::size_t v = 0; v < m.rows(); ++v) c.coords[h * m.rows() + v] = m(v, h);
  return c;
}

Matrix Cochain::as_map() const {
  if (degree != 1) throw InputError("only degree-1 cochains are linear maps");
  Matrix m(v_dim, h_dim);
  for (std::size_t h = 0; h < h_dim; ++h)
    for (std::size_t v = 0; v < v_dim; ++v) m(v, h) = coords[h * v_dim + v];
  return m;
}

namespace {

using BlockVisitor = std::function<void(std::size_t block, const Scalar& coeff)>;

// Expands phi's arguments multilinearly into basis blocks: calls visit with
// the flat block offset ((p1*P + ...)*h_dim + h)*v_dim and the product of
// the coefficients.
void expand(const std::vector<Vector>& slots, const Vector& last, std::size_t pairs, std::size_t h_dim,
            std::size_t v_dim, const BlockVisitor& visit) {
  std::function<void(std::size_t, std::size_t, const Scalar&)> rec = [&](std::size_t k, std::size_t prefix,
                                                                          const Scalar& coeff) {
    if (k == slots.size()) {
      for (std::size_t h = 0; h < h_dim; ++h)
        if (!last[h].is_zero()) visit((prefix * h_dim + h) * v_dim, coeff * last[h]);
      return;
    }
    const Vector& s = slots[k];
    for (std::size_t p = 0; p < pairs; ++p)
      if (!s[p].is_zero()) rec(k + 1, prefix * pairs + p, coeff * s[p]);
  };
  rec(0, 0, Scalar(1));
}

// One summand sign * post(phi(slots, last)); post == nullptr is the identity.
struct Term {
  int sign;
  std::vector<Vector> slots;
  Vector last;
  const Matrix* post;
};

// Output basis tuple of a degree-(n+1) cochain: pair indices and final index.
struct OutputTuple {
  std::vector<std::size_t> pairs;
  std::size_t last;
};

OutputTuple decode(std::size_t block, std::size_t n_pairs, std::size_t pairs, std::size_t h_dim) {
  OutputTuple t{std::vector<std::size_t>(n_pairs), block % h_dim};
  block /= h_dim;
  for (std::size_t i = n_pairs; i-- > 0;) {
    t.pairs[i] = block % pairs;
    block /= pairs;
  }
  return t;
}

// The coboundary formula at one output basis tuple, for phi of degree n =
// out.pairs.size(). The substituted slot u_k ^ [u_j,v_j,v_k] + [u_j,v_j,u_k] ^ v_k
// is expanded in pair coordinates.
std::vector<Term> coboundary_terms(const ThreeLeibnizRep& r, const WedgePairBasis& wp, const OutputTuple& out) {
  const std::size_t n = out.pairs.size();
  const std::size_t h_dim = r.dim();
  const TrilinearTable& br = r.algebra.bracket;
  auto unit_pair = [&](std::size_t q) { return Vector::unit(wp.size(), q); };
  auto without = [&](std::size_t j) {
    std::vector<Vector> s;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) s.push_back(unit_pair(out.pairs[i]));
    return s;
  };
  std::vector<Term> terms;
  const Vector w = Vector::unit(h_dim, out.last);
  for (std::size_t j = 0; j < n; ++j) {
    const int sj = (j + 1) % 2 ? -1 : 1;  // (-1)^j with 1-based j
    auto [uj, vj] = wp.pair(out.pairs[j]);
    for (std::size_t k = j + 1; k < n; ++k) {
      auto [uk, vk] = wp.pair(out.pairs[k]);
      Vector sub = wedge_expand(wp, Vector::unit(h_dim, uk), br.at(uj, vj, vk));
      sub += wedge_expand(wp, br.at(uj, vj, uk), Vector::unit(h_dim, vk));
      std::vector<Vector> slots;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        slots.push_back(i == k ? sub : unit_pair(out.pairs[i]));
      }
      terms.push_back(Term{sj, std::move(slots), w, nullptr});
    }
    terms.push_back(Term{sj, without(j), br.at(uj, vj, out.last), nullptr});
    terms.push_back(Term{-sj, without(j), w, &r.l(uj, vj)});
  }
  auto [un, vn] = wp.pair(out.pairs[n - 1]);
  std::vector<Vector> head;
  for (std::size_t i = 0; i + 1 < n; ++i) head.push_back(unit_pair(out.pairs[i]));
  const int sn = (n + 1) % 2 ? -1 : 1;
  terms.push_back(Term{sn, head, Vector::unit(h_dim, vn), &r.m(un, out.last)});
  terms.push_back(Term{sn, std::move(head), Vector::unit(h_dim, un), &r.r(vn, out.last)});
  return terms;
}

void require_degree_one(std::size_t n) {
  if (n == 0) throw InputError("coboundary on degree 0 needs the embedding tensor (use delta0)");
}

// Applies the terms of one output block to phi.
Vector apply_terms(const std::vector<Term>& terms, const Cochain& phi) {
  Vector out(phi.v_dim);
  for (const Term& t : terms) {
    Vector v = phi.eval(t.slots, t.last);
    if (v.is_zero()) continue;
    if (t.post) v = *t.post * v;
    out.axpy(Scalar(t.sign), v);
  }
  return out;
}

// Adds the terms of one output block (rows row_base..) into m.
void assemble_terms(const std::vector<Term>& terms, std::size_t row_base, std::size_t pairs, std::size_t h_dim,
                    std::size_t v_dim, Matrix& m) {
  for (const Term& t : terms)
    expand(t.slots, t.last, pairs, h_dim, v_dim, [&](std::size_t col_base, const Scalar& coeff) {
      Scalar c = coeff * Scalar(t.sign);
      for (std::size_t v = 0; v < v_dim; ++v) {
        if (!t.post) {
          m(row_base + v, col_base + v) += c;
          continue;
        }
        for (std::size_t w = 0; w < v_dim; ++w) {
          const Scalar& e = (*t.post)(w, v);
          if (!e.is_zero()) m(row_base + w, col_base + v).add_product(c, e);
        }
      }
    });
}

}  // namespace

Vector Cochain::eval(const std::vector<Vector>& slots, const Vector& w) const {
  if (slots.size() + 1 != degree) throw InputError("cochain of degree " + std::to_string(degree) + " takes " +
                                                   std::to_string(degree - 1) + " bivector slots");
  Vector out(v_dim);
  expand(slots, w, pair_count(), h_dim, v_dim, [&](std::size_t block, const Scalar& coeff) {
    for (std::size_t v = 0; v < v_dim; ++v)
      if (!coords[block + v].is_zero()) out[v].add_product(coeff, coords[block + v]);
  });
  return out;
}

Cochain delta(const ThreeLeibnizRep& r, const Cochain& phi) {
  require_degree_one(phi.degree);
  if (phi.h_dim != r.dim() || phi.v_dim != r.carrier.dim()) throw InputError("cochain does not match the representation");
  const WedgePairBasis wp(r.dim());
  Cochain out = Cochain::zero(phi.degree + 1, phi.h_dim, phi.v_dim);
  const std::size_t blocks = out.coords.dim() / phi.v_dim;
  for (std::size_t b = 0; b < blocks; ++b) {
    Vector v = apply_terms(coboundary_terms(r, wp, decode(b, phi.degree, wp.size(), phi.h_dim)), phi);
    for (std::size_t i = 0; i < phi.v_dim; ++i) out.coords[b * phi.v_dim + i] = std::move(v[i]);
  }
  return out;
}

Matrix delta_matrix(const ThreeLeibnizRep& r, std::size_t n) {
  require_degree_one(n);
  const std::size_t h = r.dim(), v = r.carrier.dim();
  const WedgePairBasis wp(h);
  Matrix m(Cochain::dimension(n + 1, h, v), Cochain::dimension(n, h, v));
  const std::size_t blocks = m.rows() / (v ? v : 1);
  for (std::size_t b = 0; b < blocks && v; ++b)
    assemble_terms(coboundary_terms(r, wp, decode(b, n, wp.size(), h)), b * v, wp.size(), h, v, m);
  return m;
}

// ---------------------------------------------------------------- complex

std::size_t default_degree_cap() {
  const char* env = std::getenv("TENSORFORGE_DEGREE_CAP");
  if (!env || !*env) return 3;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < 1) throw InputError(std::string("TENSORFORGE_DEGREE_CAP must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

CochainComplex::CochainComplex(EmbeddingTensorProblem p, std::optional<std::size_t> cap)
    : CochainComplex(std::move(p), cap ? *cap : default_degree_cap(), true) {
  require(check_net(p_), "cochain complex needs an embedding tensor");
}

CochainComplex::CochainComplex(EmbeddingTensorProblem p, std::size_t cap, bool)
    : p_(std::move(p)), rep_(build_induced_rep(p_)), cap_(cap) {}

CochainComplex CochainComplex::unchecked(EmbeddingTensorProblem p, std::optional<std::size_t> cap) {
  return CochainComplex(std::move(p), cap ? *cap : default_degree_cap(), true);
}

void CochainComplex::require_degree(std::size_t n) const {
  if (n <= cap_) return;
  Report r("cochain complex");
  r.refuse("degree " + std::to_string(n) + " exceeds the degree cap " + std::to_string(cap_) +
           " (set TENSORFORGE_DEGREE_CAP to raise it)");
  throw PreconditionError("degree " + std::to_string(n) + " exceeds the degree cap " + std::to_string(cap_), r);
}

std::size_t CochainComplex::cochain_dim(std::size_t n) const {
  const std::size_t l = p_.L().space.dim();
  if (n == 0) return l * (l - (l ? 1 : 0)) / 2;
  return Cochain::dimension(n, p_.H().dim(), l);
}

Cochain CochainComplex::delta0(const Vector& a1, const Vector& a2) const {
  const std::size_t l = p_.L().space.dim(), h = p_.H().dim();
  if (a1.dim() != l || a2.dim() != l) throw InputError("delta0 arguments must lie in " + p_.L().space.name);
  Matrix ad(l, l);
  const TrilinearTable& lb = p_.L().bracket.as_general();
  for (std::size_t c = 0; c < l; ++c) ad.set_column(c, lb.eval(a1, a2, Vector::unit(l, c)));
  Matrix m = p_.lambda.matrix * p_.rho().eval(a1, a2);
  m -= ad * p_.lambda.matrix;
  (void)h;
  return Cochain::from_map(m);
}

Cochain CochainComplex::delta(const Cochain& phi) const {
  require_degree(phi.degree);
  return tensorforge::delta(rep_, phi);
}

const Matrix& CochainComplex::matrix(std::size_t n) const {
  require_degree(n);
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  Matrix m;
  if (n == 0) {
    const std::size_t l = p_.L().space.dim();
    const WedgePairBasis wp(l);
    m = Matrix(cochain_dim(1), wp.size());
    for (std::size_t q = 0; q < wp.size(); ++q) {
      auto [a, b] = wp.pair(q);
      m.set_column(q, delta0(Vector::unit(l, a), Vector::unit(l, b)).coords);
    }
  } else {
    m = delta_matrix(rep_, n);
  }
  return cache_.emplace(n, std::move(m)).first->second;
}

CohomologyDims CochainComplex::dims(std::size_t n) const {
  if (n == 0) throw InputError("cohomology is reported from degree 1");
  require_degree(n);
  auto rank_of = [&](std::size_t k) {
    auto it = ranks_.find(k);
    if (it != ranks_.end()) return it->second;
    return ranks_.emplace(k, rank(matrix(k))).first->second;
  };
  CohomologyDims d;
  d.degree = n;
  d.cochains = cochain_dim(n);
  d.cocycles = d.cochains - rank_of(n);
  d.coboundaries = rank_of(n - 1);
  return d;
}

// ---------------------------------------------------------------- pushforward

namespace {

Matrix inverse_or_throw(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw InputError("f_H is not invertible");
  return *inv;
}

}  // namespace

Cochain pushforward(const NetHomomorphism& h, const Cochain& phi) {
  const Matrix g = inverse_or_throw(h.f_H.matrix);
  const std::size_t hd = phi.h_dim;
  if (g.rows() != hd || h.f_L.matrix.rows() != phi.v_dim) throw InputError("cochain does not match the homomorphism");
  const WedgePairBasis wp(hd);
  Cochain out = Cochain::zero(phi.degree, hd, phi.v_dim);
  const std::size_t blocks = out.coords.dim() / phi.v_dim;
  for (std::size_t b = 0; b < blocks; ++b) {
    OutputTuple t = decode(b, phi.degree - 1, wp.size(), hd);
    std::vector<Vector> slots;
    for (std::size_t q : t.pairs) {
      auto [u, v] = wp.pair(q);
      slots.push_back(wedge_expand(wp, g.column(u), g.column(v)));
    }
    Vector v = h.f_L.apply(phi.eval(slots, g.column(t.last)));
    for (std::size_t i = 0; i < phi.v_dim; ++i) out.coords[b * phi.v_dim + i] = std::move(v[i]);
  }
  return out;
}

Matrix pushforward_matrix(const NetHomomorphism& h, std::size_t n) {
  require_degree_one(n);
  const Matrix g = inverse_or_throw(h.f_H.matrix);
  const std::size_t hd = g.rows(), vd = h.f_L.matrix.rows();
  const WedgePairBasis wp(hd);
  const std::size_t dim = Cochain::dimension(n, hd, vd);
  Matrix m(dim, dim);
  for (std::size_t b = 0; b < dim / (vd ? vd : 1) && vd; ++b) {
    OutputTuple t = decode(b, n - 1, wp.size(), hd);
    Term term{1, {}, g.column(t.last), &h.f_L.matrix};
    for (std::size_t q : t.pairs) {
      auto [u, v] = wp.pair(q);
      term.slots.push_back(wedge_expand(wp, g.column(u), g.column(v)));
    }
    assemble_terms({term}, b * vd, wp.size(), hd, vd, m);
  }
  return m;
}

Report check_rep_naturality(const NetHomomorphism& h, const CheckOptions& opts) {
  Report report("induced representations under a homomorphism");
  Report pre = check_net_hom(h, opts);
  if (!pre.passed()) {
    report.append(pre);
    report.refuse("not a homomorphism of embedding tensors");
    return report;
  }
  const ThreeLeibnizRep r1 = build_induced_rep(h.source), r2 = build_induced_rep(h.target);
  const Matrix& fl = h.f_L.matrix;
  const Space& H = h.source.H();
  const std::size_t m = H.dim();
  CheckRecorder cl("left action is natural", "f_L l1(y1,y2,x) = l2(f_H y1, f_H y2, f_L x)", opts);
  CheckRecorder cm("middle action is natural", "f_L m1(y1,x,y2) = m2(f_H y1, f_L x, f_H y2)", opts);
  CheckRecorder cr("right action is natural", "f_L r1(x,y1,y2) = r2(f_L x, f_H y1, f_H y2)", opts);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector fa = h.f_H.image_of_basis(a), fb = h.f_H.image_of_basis(b);
      auto args = tuple_labels(H, {a, b});
      cl.record_matrices(args, fl * r1.l(a, b), r2.l_eval(fa, fb) * fl);
      cm.record_matrices(args, fl * r1.m(a, b), r2.m_eval(fa, fb) * fl);
      cr.record_matrices(std::move(args), fl * r1.r(a, b), r2.r_eval(fa, fb) * fl);
    }
  report.add(std::move(cl).finish());
  report.add(std::move(cm).finish());
  report.add(std::move(cr).finish());
  return report;
}

}  // namespace tensorforge
