#include <doctest.h>

#include "hopfcode/enumerate.hpp"
#include "hopfcode/omega.hpp"

using namespace hopfcode;

namespace {

OmegaAlgebra make_omega(unsigned s_size, std::vector<unsigned> images,
                        unsigned capN, std::uint64_t p) {
  OmegaSpec spec;
  spec.s_size = s_size;
  spec.omega = std::move(images);
  spec.capN = capN;
  return OmegaAlgebra(spec, Field::prime(p));
}

}  // namespace

TEST_CASE("construction rejects non-associative structure constants") {
  Field f3 = Field::prime(3);
  // Two-dimensional table with b*b = a but a acting as a unit only on one
  // side; the unit law check trips first.
  std::vector<std::vector<std::vector<Scalar>>> mul(
      2, std::vector<std::vector<Scalar>>(2,
                                          std::vector<Scalar>(2, f3.zero())));
  mul[0][0][0] = f3.one();
  mul[0][1][1] = f3.one();
  mul[1][0][0] = f3.one();  // b * a = a: breaks a as a two-sided unit
  mul[1][1][0] = f3.one();
  std::vector<Scalar> unit = {f3.one(), f3.zero()};
  CHECK_THROWS_AS(StructureAlgebra(f3, {"a", "b"}, mul, unit), Error);
}

TEST_CASE("multiplication follows the structure constants") {
  OmegaAlgebra alg = make_omega(2, {0, 1}, 2, 7);
  AlgebraElement e0 = alg.idempotent(0);
  AlgebraElement e0x = alg.basis(0, 1);
  AlgebraElement e1x = alg.basis(1, 1);
  CHECK(e0 * e0 == e0);
  CHECK((e0x * e1x).is_zero());  // x^2 = 0
  for (unsigned i = 0; i < 4; ++i) {
    AlgebraElement b = alg.algebra().basis_element(i);
    CHECK(alg.algebra().unit() * b == b);
    CHECK(b * alg.algebra().unit() == b);
  }
}

TEST_CASE("inversion solves against the left multiplication matrix") {
  // x^2 = 0: (1+x)^{-1} = 1 - x.
  OmegaAlgebra a2 = make_omega(1, {0}, 2, 7);
  AlgebraElement u2 = a2.algebra().unit() + a2.x_power(1);
  CHECK(u2.inverse() == a2.algebra().unit() - a2.x_power(1));
  // x^3 = 0: (1+x)^{-1} = 1 - x + x^2.
  OmegaAlgebra a3 = make_omega(1, {0}, 3, 7);
  AlgebraElement u3 = a3.algebra().unit() + a3.x_power(1);
  AlgebraElement expected =
      a3.algebra().unit() - a3.x_power(1) + a3.x_power(2);
  CHECK(u3.inverse() == expected);
  CHECK(u3 * u3.inverse() == a3.algebra().unit());
  CHECK_THROWS_AS(a3.x_power(1).inverse(), NotInvertible);
}

TEST_CASE("right ideal closure reaches a fixpoint") {
  OmegaAlgebra alg = make_omega(2, {0, 1}, 2, 2);
  RightSubmodule c1 = right_ideal_closure(alg.algebra(), {alg.basis(0, 1)});
  CHECK(c1.dim() == 1);
  CHECK(c1.space().contains(alg.basis(0, 1).coords()));
  RightSubmodule whole = right_ideal_closure(alg.algebra(),
                                             {alg.algebra().unit()});
  CHECK(whole.dim() == alg.algebra().dim());
  RightSubmodule none = right_ideal_closure(alg.algebra(), {});
  CHECK(none.dim() == 0);
  // Re-running closure on the result is a fixpoint.
  CHECK(is_right_submodule(alg.algebra(), c1.space()));
}

TEST_CASE("exhaustive submodule enumeration at tiny scale") {
  // k(Id,1), |S| = 2 over GF(2): the four submodules of k x k.
  OmegaAlgebra prod = make_omega(2, {0, 1}, 1, 2);
  auto subs = enumerate_right_submodules(prod.algebra());
  CHECK(subs.size() == 4);
  bool has_e0 = false, has_e1 = false;
  for (const auto& m : subs) {
    if (m.space() == prod.ideal(0, 0).space()) has_e0 = true;
    if (m.space() == prod.ideal(1, 0).space()) has_e1 = true;
  }
  CHECK(has_e0);
  CHECK(has_e1);

  // k(Id,2), |S| = 1 over GF(2) = k[x]/x^2: {0, xR, R}.
  OmegaAlgebra dual = make_omega(1, {0}, 2, 2);
  auto subs2 = enumerate_right_submodules(dual.algebra());
  CHECK(subs2.size() == 3);

  // Budget refusal at dimension 24 over GF(7).
  std::vector<unsigned> omega12(12);
  for (unsigned i = 0; i < 12; ++i) omega12[i] = (i + 6) % 12;
  OmegaAlgebra big = make_omega(12, std::move(omega12), 2, 7);
  CHECK_THROWS_AS(enumerate_right_submodules(big.algebra()), BudgetExceeded);
}

TEST_CASE("serial and parallel enumeration agree") {
  struct Inst {
    unsigned s;
    std::vector<unsigned> omega;
    unsigned n;
    std::uint64_t p;
  };
  std::vector<Inst> instances = {{2, {1, 0}, 2, 3},
                                 {1, {0}, 3, 2},
                                 {3, {1, 2, 0}, 2, 2},
                                 {2, {0, 1}, 2, 5}};
  for (const auto& inst : instances) {
    OmegaAlgebra alg = make_omega(inst.s, inst.omega, inst.n, inst.p);
    auto serial = enumerate_right_submodules_serial(alg.algebra());
    auto parallel = enumerate_right_submodules(alg.algebra());
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
      CHECK(serial[i].space() == parallel[i].space());
  }
}

TEST_CASE("indecomposability by the direct sum definition") {
  OmegaAlgebra alg = make_omega(2, {0, 1}, 1, 2);
  auto subs = enumerate_right_submodules(alg.algebra());
  RightSubmodule n00 = alg.ideal(0, 0);
  CHECK(is_indecomposable(n00, subs));
  RightSubmodule whole(alg.algebra(),
                       Subspace::full(alg.field(), alg.algebra().dim()));
  CHECK_FALSE(is_indecomposable(whole, subs));  // A = e0 A + e1 A
  RightSubmodule zero(alg.algebra(),
                      Subspace::zero(alg.field(), alg.algebra().dim()));
  CHECK_FALSE(is_indecomposable(zero, subs));
}

TEST_CASE("right annihilator is the joint kernel of left multiplications") {
  OmegaAlgebra alg = make_omega(2, {1, 0}, 2, 3);
  Subspace ideal = alg.ideal(0, 1).space();
  Subspace ann = right_annihilator(alg.algebra(), ideal);
  for (std::size_t i = 0; i < ann.dim(); ++i) {
    AlgebraElement h = alg.algebra().element(ann.basis_row(i));
    for (std::size_t r = 0; r < ideal.dim(); ++r)
      CHECK((alg.algebra().element(ideal.basis_row(r)) * h).is_zero());
  }
  CHECK(right_annihilator(alg.algebra(),
                          Subspace::zero(alg.field(), 4)) ==
        Subspace::full(alg.field(), 4));
}
