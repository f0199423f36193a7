#include "fixtures.hpp"
#include "random_instances.hpp"

#include <doctest.h>

using namespace tensorforge;
using namespace tf_test;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::unit(n, i); }

}  // namespace

TEST_SUITE("multilinear") {

TEST_CASE("spaces reject duplicate labels") {
  CHECK_THROWS_AS(Space("V", {"a", "a"}), InputError);
  CHECK(Space::numbered("V", 3).label(2) == "e3");
  const Space s = direct_sum(Space::numbered("A", 1), Space::numbered("A", 2), "A+A");
  CHECK(s.basis_labels == std::vector<std::string>{"A1:e1", "A2:e1", "A2:e2"});
}

TEST_CASE("alternating evaluation on the 4-dimensional example") {
  const ThreeLieAlgebra h = load_fixture("parametric_a4.json").three_lie("H");
  CHECK(h.bracket.eval(e(4, 0), e(4, 1), e(4, 2)) == e(4, 3));
  CHECK(h.bracket.eval(e(4, 1), e(4, 0), e(4, 2)) == -e(4, 3));
  CHECK(h.bracket.eval(e(4, 0), e(4, 0), e(4, 2)).is_zero());
  CHECK(h.bracket.at(2, 0, 1) == e(4, 3));
  CHECK(h.bracket.at(2, 1, 0) == -e(4, 3));
}

TEST_CASE("alternating tables only accept increasing keys") {
  AlternatingTrilinearTable t(3, 1);
  CHECK_THROWS_AS(t.set(1, 0, 2, Vector{1}), InputError);
  CHECK_THROWS_AS(t.set(0, 1, 2, Vector{1, 2}), InputError);
  CHECK_THROWS_AS((void)t.eval(Vector{1, 0}, e(3, 0), e(3, 1)), InputError);
}

TEST_CASE("trilinear evaluation is linear in each argument") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.dim(), m = rng.dim();
    TrilinearTable t(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (rng.coin(0.3)) t.set(i, j, k, rng.vector(m));
    const Vector x = rng.vector(n), x2 = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const Scalar a = rng.small(), b = rng.small();
    const Vector comb = a * x + b * x2;
    CHECK(t.eval(comb, y, z) == a * t.eval(x, y, z) + b * t.eval(x2, y, z));
    CHECK(t.eval(y, comb, z) == a * t.eval(y, x, z) + b * t.eval(y, x2, z));
    CHECK(t.eval(y, z, comb) == a * t.eval(y, z, x) + b * t.eval(y, z, x2));
    CHECK(t.eval1(x, 0, n - 1) == t.eval(x, e(n, 0), e(n, n - 1)));
    CHECK(t.eval2(0, x, n - 1) == t.eval(e(n, 0), x, e(n, n - 1)));
    CHECK(t.eval3(0, n - 1, x) == t.eval(e(n, 0), e(n, n - 1), x));
  }
}

TEST_CASE("alternating evaluation flips sign under transpositions") {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng.below(2), m = rng.dim();
    AlternatingTrilinearTable t(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (rng.coin()) t.set(i, j, k, rng.vector(m));
    CHECK(t.as_general().is_alternating());
    const Vector x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const Vector v = t.eval(x, y, z);
    CHECK(t.eval(y, x, z) == -v);
    CHECK(t.eval(x, z, y) == -v);
    CHECK(t.eval(z, y, x) == -v);
    CHECK(t.eval(x, x, z).is_zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) CHECK(t.at(i, j, k) == -t.at(j, i, k));
  }
}

TEST_CASE("pair actions are skew") {
  PairAction rho(3, 2);
  rho.set(0, 2, Matrix{{1, 2}, {3, 4}});
  CHECK(rho.at(2, 0) == Scalar(-1) * Matrix{{1, 2}, {3, 4}});
  CHECK(rho.at(1, 1).is_zero());
  CHECK(rho.eval(e(3, 2), e(3, 0)) == rho.at(2, 0));
  CHECK(rho.eval(Vector{1, 1, 1}, Vector{1, 1, 1}).is_zero());
  CHECK_THROWS_AS(rho.set(2, 0, Matrix(2, 2)), InputError);
  CHECK_THROWS_AS(rho.set(0, 1, Matrix(3, 3)), InputError);
}

TEST_CASE("wedge pair basis and expansion") {
  const WedgePairBasis b(4);
  CHECK(b.size() == 6);
  CHECK(b.pair(0) == Pair{0, 1});
  CHECK(b.pair(5) == Pair{2, 3});
  CHECK(b.index_of(1, 3) == 4);
  const WedgePairBasis b3(3);
  CHECK(wedge_expand(b3, e(3, 0), e(3, 1)) == Vector{1, 0, 0});
  CHECK(wedge_expand(b3, Vector{1, 1, 0}, e(3, 2)) == Vector{0, 1, 1});
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const Vector u = rng.vector(4), v = rng.vector(4);
    CHECK(wedge_expand(b, u, u).is_zero());
    CHECK(wedge_expand(b, u, v) == -wedge_expand(b, v, u));
  }
  CHECK_THROWS_AS(wedge_expand(b, e(3, 0), e(4, 0)), InputError);
}

}  // TEST_SUITE
