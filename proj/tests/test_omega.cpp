#include <doctest.h>

#include "hopfcode/random.hpp"
#include "hopfcode/verify.hpp"

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

TEST_CASE("omega spec validation") {
  OmegaSpec bad;
  bad.s_size = 3;
  bad.omega = {0, 0, 1};
  bad.capN = 2;
  CHECK_THROWS_AS(bad.validate(), InvalidPermutation);
  bad.omega = {0, 1};
  CHECK_THROWS_AS(bad.validate(), InvalidPermutation);
  bad.omega = {0, 1, 2};
  bad.capN = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidOrder);
}

TEST_CASE("product rule matches the rewriting evaluator") {
  OmegaAlgebra alg = make_omega(2, {0, 1}, 2, 5);
  // Spec'd instances, via the oracle.
  CHECK(alg.basis(0, 1) * alg.basis(0, 0) ==
        rewrite_basis_product(alg, 0, 1, 0, 0));
  CHECK(alg.basis(0, 1) * alg.basis(0, 0) == alg.basis(0, 1));
  CHECK((alg.basis(0, 1) * alg.basis(1, 0)).is_zero());

  // Exhaustive agreement on several shapes, including non-trivial omega.
  struct Inst {
    unsigned s;
    std::vector<unsigned> omega;
    unsigned n;
  };
  for (const Inst& inst : std::vector<Inst>{{2, {1, 0}, 3},
                                            {3, {1, 2, 0}, 2},
                                            {4, {1, 0, 3, 2}, 3},
                                            {1, {0}, 4}}) {
    OmegaAlgebra a = make_omega(inst.s, inst.omega, inst.n, 7);
    for (unsigned s1 = 0; s1 < inst.s; ++s1)
      for (unsigned m1 = 0; m1 < inst.n; ++m1)
        for (unsigned s2 = 0; s2 < inst.s; ++s2)
          for (unsigned m2 = 0; m2 < inst.n; ++m2)
            CHECK(a.basis(s1, m1) * a.basis(s2, m2) ==
                  rewrite_basis_product(a, s1, m1, s2, m2));
  }
}

TEST_CASE("k[x]/x^3 is the single-idempotent case") {
  OmegaAlgebra alg = make_omega(1, {0}, 3, 7);
  CHECK(alg.algebra().dim() == 3);
  CHECK(alg.x_power(1).pow(3).is_zero());
  CHECK_FALSE(alg.x_power(1).pow(2).is_zero());
  for (unsigned m = 0; m < 3; ++m)
    CHECK(alg.algebra().unit() * alg.basis(0, m) == alg.basis(0, m));
}

TEST_CASE("canonical ideals have the expected bases") {
  OmegaAlgebra alg = make_omega(2, {1, 0}, 3, 5);
  for (unsigned s = 0; s < 2; ++s)
    for (unsigned t = 0; t < 3; ++t) {
      RightSubmodule n = alg.ideal(s, t);
      CHECK(n.dim() == 3 - t);
      for (unsigned k = t; k < 3; ++k)
        CHECK(n.space().contains(alg.basis(s, k).coords()));
    }
  CHECK(alg.ideal(0, 2).dim() == 1);
  CHECK_THROWS_AS(alg.ideal(2, 0), IndexOutOfRange);
  CHECK_THROWS_AS(alg.ideal(0, 3), IndexOutOfRange);
}

TEST_CASE("scaled ideals preserve dimension and reject bad r") {
  OmegaAlgebra alg = make_omega(2, {1, 0}, 3, 5);
  for (unsigned s = 0; s < 2; ++s)
    for (unsigned t = 0; t < 3; ++t) {
      CHECK(alg.scaled_ideal(alg.algebra().zero(), s, t) == alg.ideal(s, t));
      AlgebraElement r = alg.from_x_polynomial(
          {alg.field().from_integer(2), alg.field().from_integer(3)});
      CHECK(alg.scaled_ideal(r, s, t).dim() == 3 - t);
    }
  CHECK_THROWS_AS(alg.scaled_ideal(alg.idempotent(0), 0, 0), NotInR);

  // GF(2), x^2 = 0: (1+x) span{x} = span{x}.
  OmegaAlgebra tiny = make_omega(1, {0}, 2, 2);
  CHECK(tiny.scaled_ideal(tiny.algebra().unit(), 0, 1) == tiny.ideal(0, 1));
}

TEST_CASE("classification of k(Id,1) with two idempotents") {
  OmegaAlgebra alg = make_omega(2, {0, 1}, 1, 3);
  Classification cls = classify_indecomposables(alg);
  CHECK_FALSE(cls.sampled);
  CHECK(cls.family.size() == 2);
  CHECK(cls.representative_count() == 2);
  CHECK(cls.family[0].module == alg.ideal(0, 0));
  CHECK(cls.family[1].module == alg.ideal(1, 0));
}

TEST_CASE("classification dedups the scaled family") {
  // GF(2), k[x]/x^2: family is exactly {R, xR}.
  OmegaAlgebra alg = make_omega(1, {0}, 2, 2);
  Classification cls = classify_indecomposables(alg);
  CHECK(cls.family.size() == 2);
  CHECK(cls.representative_count() == 2);
  std::vector<Subspace> spaces;
  for (const auto& c : cls.family) spaces.push_back(c.module.space());
  CHECK((spaces[0] == alg.ideal(0, 0).space() ||
         spaces[1] == alg.ideal(0, 0).space()));
  CHECK((spaces[0] == alg.ideal(0, 1).space() ||
         spaces[1] == alg.ideal(0, 1).space()));
}

TEST_CASE("representative count is N |S| on random instances") {
  DeterministicRng rng(11);
  for (int k = 0; k < 6; ++k) {
    unsigned s_size = 1 + static_cast<unsigned>(rng.next(3));
    unsigned capN = 1 + static_cast<unsigned>(rng.next(3));
    std::vector<unsigned> images(s_size);
    for (unsigned i = 0; i < s_size; ++i) images[i] = i;
    for (unsigned i = s_size; i > 1; --i)
      std::swap(images[i - 1], images[rng.next(i)]);
    OmegaAlgebra alg = make_omega(s_size, images, capN, 3);
    Classification cls = classify_indecomposables(alg);
    CHECK(cls.representative_count() == s_size * capN);
    for (const auto& c : cls.family)
      CHECK(c.module.dim() == capN - c.t);
  }
}

TEST_CASE("enumerated indecomposables equal the scaled family") {
  OmegaAlgebra alg = make_omega(2, {1, 0}, 2, 3);
  VerifyEntry e = verify_classification(alg, default_enumeration_budget());
  CHECK(e.pass);
}

TEST_CASE("sampled classification over a cyclotomic field") {
  OmegaSpec spec;
  spec.s_size = 2;
  spec.omega = {0, 1};
  spec.capN = 2;
  OmegaAlgebra alg(spec, Field::cyclotomic(4));
  // Exhaustive r is refused; a caller sample works and is tagged.
  CHECK_THROWS_AS(classify_indecomposables(alg), BudgetExceeded);
  std::vector<AlgebraElement> sample = {
      alg.algebra().zero(), alg.x_power(1),
      alg.from_x_polynomial({alg.field().root_of_unity(4)})};
  Classification cls = classify_indecomposables(
      alg, default_enumeration_budget(), &sample);
  CHECK(cls.sampled);
  CHECK(cls.representative_count() == 4);
}
