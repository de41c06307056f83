#include <doctest.h>

#include "hopfcode/forms.hpp"
#include "hopfcode/random.hpp"

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

TEST_CASE("monomial gram matrices") {
  Field f7 = Field::prime(7);
  // Identity sigma, all d = 1.
  MonomialFormSpec id;
  id.sigma = {0, 1, 2};
  id.d = {f7.one(), f7.one(), f7.one()};
  CHECK(BilinearForm::from_monomial(f7, id).gram() ==
        Matrix::identity(f7, 3));

  // The cyclic n = 2 canonical form: mu(t) = -t, d = 1/2.
  OmegaAlgebra view = make_omega(2, {0, 1}, 1, 7);
  CanonicalFormSpec fs;
  fs.mu = {0, 1};  // -t mod 2 is the identity
  fs.nu = {0};
  Scalar half = f7.from_integer(2).inverse();
  fs.d = {half, half};
  BilinearForm form = canonical_form(view, fs);
  Matrix expected(f7, 2, 2);
  expected.at(0, 0) = half;
  expected.at(1, 1) = half;
  CHECK(form.gram() == expected);

  MonomialFormSpec zero_d;
  zero_d.sigma = {0};
  zero_d.d = {f7.zero()};
  CHECK_THROWS_AS(BilinearForm::from_monomial(f7, zero_d), ZeroCoefficient);
}

TEST_CASE("monomial detection") {
  Field f7 = Field::prime(7);
  Matrix diag(f7, 2, 2);
  diag.at(0, 0) = f7.from_integer(2);
  diag.at(1, 1) = f7.from_integer(3);
  auto cert = detect_monomial(diag);
  REQUIRE(cert.has_value());
  CHECK(cert->sigma == std::vector<unsigned>{0, 1});
  CHECK(cert->d[0] == f7.from_integer(2));
  CHECK(cert->d[1] == f7.from_integer(3));

  Matrix swap(f7, 2, 2);
  swap.at(0, 1) = f7.one();
  swap.at(1, 0) = f7.one();
  auto cert2 = detect_monomial(swap);
  REQUIRE(cert2.has_value());
  CHECK(cert2->sigma == std::vector<unsigned>{1, 0});

  Matrix bad(f7, 2, 2);
  bad.at(0, 0) = f7.one();
  bad.at(0, 1) = f7.one();
  bad.at(1, 1) = f7.one();
  CHECK_FALSE(detect_monomial(bad).has_value());
}

TEST_CASE("orthogonals have complementary dimension") {
  Field f5 = Field::prime(5);
  DeterministicRng rng(3);
  MonomialFormSpec spec;
  spec.sigma = {2, 0, 3, 1};
  for (int i = 0; i < 4; ++i) spec.d.push_back(rng.nonzero_scalar(f5));
  BilinearForm form = BilinearForm::from_monomial(f5, spec);
  CHECK(form.orthogonal_left(Subspace::full(f5, 4)).dim() == 0);
  CHECK(form.orthogonal_right(Subspace::full(f5, 4)).dim() == 0);
  for (int k = 0; k < 20; ++k) {
    Subspace w = rng.subspace(f5, 4);
    CHECK(form.orthogonal_left(w).dim() == 4 - w.dim());
    CHECK(form.orthogonal_right(w).dim() == 4 - w.dim());
    // Orthogonality is literal.
    Subspace ol = form.orthogonal_left(w);
    for (std::size_t i = 0; i < ol.dim(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j)
        CHECK(form.pair(ol.basis_row(i), w.basis_row(j)).is_zero());
  }
}

TEST_CASE("degenerate forms are refused") {
  Field f5 = Field::prime(5);
  Matrix singular(f5, 2, 2);
  singular.at(0, 0) = f5.one();
  BilinearForm form = BilinearForm::from_gram(singular);
  CHECK_FALSE(form.non_degenerate());
  CHECK_THROWS_AS(form.orthogonal_left(Subspace::full(f5, 2)),
                  DegenerateForm);
  CHECK_THROWS_AS(form.nakayama(), DegenerateForm);
}

TEST_CASE("nakayama maps satisfy the defining identity") {
  Field f7 = Field::prime(7);
  DeterministicRng rng(9);
  // Monomial path.
  MonomialFormSpec spec;
  spec.sigma = {1, 2, 0};
  for (int i = 0; i < 3; ++i) spec.d.push_back(rng.nonzero_scalar(f7));
  BilinearForm form = BilinearForm::from_monomial(f7, spec);
  NakayamaMap gamma = form.nakayama();
  REQUIRE(gamma.monomial.has_value());
  const auto& [tau, c] = *gamma.monomial;
  for (unsigned i = 0; i < 3; ++i) {
    CHECK(tau[i] == spec.sigma[spec.sigma[i]]);
    CHECK(c[i] == spec.d[i] / spec.d[spec.sigma[i]]);
  }
  // Generic path on a non-monomial gram.
  Matrix g(f7, 2, 2);
  g.at(0, 0) = f7.one();
  g.at(0, 1) = f7.one();
  g.at(1, 1) = f7.one();
  BilinearForm dense = BilinearForm::from_gram(g);
  NakayamaMap gamma2 = dense.nakayama();
  CHECK_FALSE(gamma2.monomial.has_value());
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      std::vector<Scalar> vi(2, f7.zero()), vj(2, f7.zero());
      vi[i] = f7.one();
      vj[j] = f7.one();
      CHECK(dense.pair(vi, vj) == dense.pair(vj, gamma2.apply(vi)));
    }
}

TEST_CASE("predicted orthogonals of the canonical ideals") {
  // |S| = 2, N = 2, mu = Id, nu = reversal, d = 1.
  OmegaAlgebra alg = make_omega(2, {0, 1}, 2, 5);
  CanonicalFormSpec fs;
  fs.mu = {0, 1};
  fs.nu = {1, 0};
  fs.d.assign(4, alg.field().one());
  BilinearForm form = canonical_form(alg, fs);

  PredictedOrthogonal p00 = predicted_orthogonal_ideal(alg, fs, 0, 0);
  CHECK(p00.right_orthogonal == alg.ideal(1, 0).space());
  CHECK(p00.right_orthogonal.dim() == 2);
  CHECK(form.orthogonal_right(alg.ideal(0, 0).space()) ==
        p00.right_orthogonal);
  CHECK(p00.left_s == 0);

  for (unsigned s = 0; s < 2; ++s)
    for (unsigned m = 0; m < 2; ++m) {
      PredictedOrthogonal p = predicted_orthogonal_ideal(alg, fs, s, m);
      CHECK(p.right_orthogonal.dim() == 4 - (2 - m));
      CHECK(form.orthogonal_right(alg.ideal(s, m).space()) ==
            p.right_orthogonal);
      CHECK(form.orthogonal_left(alg.ideal(p.left_s, p.left_m).space()) ==
            p.right_orthogonal);
    }

  CanonicalFormSpec notrev = fs;
  notrev.nu = {0, 1};
  CHECK_THROWS_AS(predicted_orthogonal_ideal(alg, notrev, 0, 0),
                  HypothesisViolated);
}

TEST_CASE("induced actions satisfy their defining identities") {
  OmegaAlgebra alg = make_omega(2, {1, 0}, 2, 7);
  DeterministicRng rng(5);
  CanonicalFormSpec fs;
  fs.mu = {1, 0};
  fs.nu = {1, 0};
  fs.d.clear();
  for (int i = 0; i < 4; ++i) fs.d.push_back(rng.nonzero_scalar(alg.field()));
  BilinearForm form = canonical_form(alg, fs);
  const StructureAlgebra& A = alg.algebra();

  for (int k = 0; k < 25; ++k) {
    AlgebraElement x = rng.element(A);
    AlgebraElement y = rng.element(A);
    AlgebraElement c = rng.element(A);
    CHECK(form.pair(action_tl(form, x, c), y) == form.pair(x, c * y));
    CHECK(form.pair(x, action_bl(form, y, c)) == form.pair(c * x, y));
    CHECK(form.pair(action_tr(form, c, x), y) == form.pair(x, y * c));
    CHECK(form.pair(x, action_br(form, c, y)) == form.pair(x * c, y));
    CHECK(action_tl(form, x, A.unit()) == x);
  }
}

TEST_CASE("basis-subset orthogonals move by the squared permutation") {
  Field f7 = Field::prime(7);
  DeterministicRng rng(17);
  MonomialFormSpec spec;
  spec.sigma = {3, 0, 4, 1, 2};
  for (int i = 0; i < 5; ++i) spec.d.push_back(rng.nonzero_scalar(f7));
  BilinearForm form = BilinearForm::from_monomial(f7, spec);
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<std::vector<Scalar>> rows, tau_rows;
    for (unsigned i = 0; i < 5; ++i) {
      if (!(mask & (1u << i))) continue;
      std::vector<Scalar> e(5, f7.zero()), et(5, f7.zero());
      e[i] = f7.one();
      et[spec.sigma[spec.sigma[i]]] = f7.one();
      rows.push_back(e);
      tau_rows.push_back(et);
    }
    Subspace wb = span_of(f7, 5, rows);
    Subspace wt = span_of(f7, 5, tau_rows);
    CHECK(form.orthogonal_right(wb) == form.orthogonal_left(wt));
  }
}
