#include "oracles.hpp"

#include <gmpxx.h>

namespace tf_test {

std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < C; ++c) {
      mpq_class scaled = m(r, c).raw() * l;
      a[r][c] = scaled.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < R; ++r) {
      for (std::size_t k = c + 1; k < C; ++k) {
        a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t fundamental_identity_failures(const TrilinearTable& t) {
  const std::size_t n = t.domain_dim();
  auto e = [n](std::size_t i) { return Vector::unit(n, i); };
  std::size_t failures = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t f = 0; f < n; ++f) {
            const Vector lhs = t.eval(e(a), e(b), t.eval(e(c), e(d), e(f)));
            const Vector rhs = t.eval(t.eval(e(a), e(b), e(c)), e(d), e(f)) +
                               t.eval(e(c), t.eval(e(a), e(b), e(d)), e(f)) +
                               t.eval(e(c), e(d), t.eval(e(a), e(b), e(f)));
            if (lhs != rhs) ++failures;
          }
  return failures;
}

Vector flatten(const Matrix& m) {
  Vector out(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out[c * m.rows() + r] = m(r, c);
  return out;
}

Vector first_order_residual(const EmbeddingTensorProblem& p, const Matrix& lambda1) {
  const std::size_t n = p.H().dim(), dl = p.L().space.dim();
  const Matrix& lam = p.lambda.matrix;
  const TrilinearTable& lb = p.L().bracket.as_general();
  const TrilinearTable& hb = p.H_bracket();
  std::vector<Vector> L0, L1;
  for (std::size_t i = 0; i < n; ++i) {
    L0.push_back(lam.column(i));
    L1.push_back(lambda1.column(i));
  }
  Vector out(n * n * n * dl);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector u3 = Vector::unit(n, k);
        Vector lhs = lb.eval(L1[i], L0[j], L0[k]) + lb.eval(L0[i], L1[j], L0[k]) + lb.eval(L0[i], L0[j], L1[k]);
        Vector rhs = lambda1 * p.rho().apply(L0[i], L0[j], u3) + lam * p.rho().apply(L1[i], L0[j], u3) +
                     lam * p.rho().apply(L0[i], L1[j], u3) + lambda1 * hb.at(i, j, k);
        lhs -= rhs;
        for (std::size_t r = 0; r < dl; ++r) out[pos++] = lhs[r];
      }
  return out;
}

Matrix degree0_coboundary(const EmbeddingTensorProblem& p, const Vector& a1, const Vector& a2) {
  const std::size_t n = p.H().dim(), dl = p.L().space.dim();
  Matrix out(dl, n);
  for (std::size_t u = 0; u < n; ++u) {
    const Vector e = Vector::unit(n, u);
    Vector col = p.lambda.matrix * p.rho().apply(a1, a2, e);
    col -= p.L().bracket.eval(a1, a2, p.lambda.matrix * e);
    out.set_column(u, col);
  }
  return out;
}

Matrix first_order_matrix(const EmbeddingTensorProblem& p) {
  const std::size_t n = p.H().dim(), dl = p.L().space.dim();
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < dl; ++r) {
      Matrix e(dl, n);
      e(r, c) = 1;
      cols.push_back(first_order_residual(p, e));
    }
  return Matrix::from_columns(cols, n * n * n * dl);
}

Matrix degree0_matrix(const EmbeddingTensorProblem& p) {
  const std::size_t n = p.H().dim(), dl = p.L().space.dim();
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < dl; ++a)
    for (std::size_t b = a + 1; b < dl; ++b)
      cols.push_back(flatten(degree0_coboundary(p, Vector::unit(dl, a), Vector::unit(dl, b))));
  return Matrix::from_columns(cols, dl * n);
}

}  // namespace tf_test
