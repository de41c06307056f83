#include <doctest.h>

#include "hopfcode/linalg.hpp"
#include "hopfcode/random.hpp"

using namespace hopfcode;

namespace {

Matrix rows_of(const Field& f, std::vector<std::vector<long long>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = f.from_integer(rows[i][j]);
  return m;
}

std::vector<Scalar> vec_of(const Field& f, std::vector<long long> v) {
  std::vector<Scalar> out;
  for (long long x : v) out.push_back(f.from_integer(x));
  return out;
}

}  // namespace

TEST_CASE("echelonize produces canonical row spaces") {
  Field f2 = Field::prime(2);
  Subspace s = echelonize(rows_of(f2, {{1, 1}, {1, 1}}));
  CHECK(s.dim() == 1);
  CHECK(s.basis().at(0, 0).is_one());
  CHECK(s.basis().at(0, 1).is_one());

  Field f5 = Field::prime(5);
  CHECK(echelonize(Matrix(f5, 3, 3)).dim() == 0);
  CHECK(echelonize(Matrix::identity(f5, 3)) == Subspace::full(f5, 3));
}

TEST_CASE("kernel matches exhaustive enumeration over GF(5)^3") {
  Field f5 = Field::prime(5);
  Matrix m = rows_of(f5, {{1, 0, 1}});
  Subspace k = kernel(m);
  // Oracle: all 125 vectors, keep those annihilated, span them.
  std::vector<std::vector<Scalar>> sols;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        if ((a + c) % 5 == 0) sols.push_back(vec_of(f5, {a, b, c}));
  Subspace expected = span_of(f5, 3, sols);
  CHECK(k == expected);
  CHECK(k.dim() == 2);
  CHECK(k.contains(vec_of(f5, {4, 0, 1})));
  CHECK(k.contains(vec_of(f5, {0, 1, 0})));

  CHECK(kernel(Matrix::identity(f5, 3)).dim() == 0);
  CHECK(kernel(Matrix(f5, 2, 3)) == Subspace::full(f5, 3));
}

TEST_CASE("subspace lattice operations") {
  Field f5 = Field::prime(5);
  Subspace e12 = span_of(f5, 3, {vec_of(f5, {1, 0, 0}), vec_of(f5, {0, 1, 0})});
  Subspace e23 = span_of(f5, 3, {vec_of(f5, {0, 1, 0}), vec_of(f5, {0, 0, 1})});
  Subspace e2 = span_of(f5, 3, {vec_of(f5, {0, 1, 0})});
  CHECK(subspace_intersect(e12, e23) == e2);
  CHECK(subspace_sum(e12, Subspace::zero(f5, 3)) == e12);

  Field f3 = Field::prime(3);
  Subspace a = span_of(f3, 2, {vec_of(f3, {1, 0})});
  Subspace b = span_of(f3, 2, {vec_of(f3, {1, 1})});
  // Oracle: rank of the stacked basis.
  Matrix stacked = rows_of(f3, {{1, 0}, {1, 1}});
  CHECK(stacked.rank() == 2);
  CHECK(is_direct_sum({a, b}));
  CHECK_FALSE(is_direct_sum({a, a}));
  CHECK_THROWS_AS(subspace_sum(e12, a), AmbientMismatch);
}

TEST_CASE("lattice dimension formula and idempotence on random pairs") {
  for (std::uint64_t p : {3ull, 7ull}) {
    Field f = Field::prime(p);
    DeterministicRng rng(42 + p);
    for (int k = 0; k < 30; ++k) {
      Subspace u = rng.subspace(f, 5);
      Subspace w = rng.subspace(f, 5);
      CHECK(subspace_sum(u, w).dim() + subspace_intersect(u, w).dim() ==
            u.dim() + w.dim());
      CHECK(echelonize(u.basis()) == u);
      CHECK(subspace_sum(u, w).contains(u));
      CHECK(u.contains(subspace_intersect(u, w)));
    }
  }
}

TEST_CASE("kernel vectors are annihilated exactly") {
  Field f7 = Field::prime(7);
  DeterministicRng rng(7);
  for (int k = 0; k < 20; ++k) {
    Matrix m(f7, 3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = rng.scalar(f7);
    Subspace ker = kernel(m);
    CHECK(ker.dim() == 5 - m.rank());
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      auto image = m.apply(ker.basis_row(i));
      for (const auto& c : image) CHECK(c.is_zero());
    }
  }
}

TEST_CASE("matrix inverse over a cyclotomic field") {
  Field fc = Field::cyclotomic(4);
  Scalar i = fc.root_of_unity(4);
  Matrix m(fc, 2, 2);
  m.at(0, 0) = fc.one();
  m.at(0, 1) = i;
  m.at(1, 0) = fc.from_rational(1, 2);
  m.at(1, 1) = fc.one();
  Matrix inv = m.inverse();
  CHECK(m * inv == Matrix::identity(fc, 2));
  CHECK_THROWS_AS(Matrix(fc, 2, 2).inverse(), NotInvertible);
}
