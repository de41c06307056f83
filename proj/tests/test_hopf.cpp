#include <doctest.h>

#include "hopfcode/verify.hpp"

using namespace hopfcode;

TEST_CASE("cyclic group algebra integral data") {
  Field f7 = Field::prime(7);
  CyclicAlgebra c = build_cyclic(5, f7);
  const StructureAlgebra& A = c.hopf.algebra();
  // t = sum x^i and phi^{-1}(counit) = t with lambda(t) = 1.
  AlgebraElement t = A.zero();
  for (unsigned i = 0; i < 5; ++i) t = t + A.basis_element(i);
  CHECK(c.hopf.right_integral() == t);
  CHECK(c.hopf.phi_inverse(c.hopf.counit_values()) == t);
  CHECK(c.hopf.integral(t).is_one());
  // Orthonormal monomial basis.
  CHECK(c.hopf.integral_form().gram() == Matrix::identity(f7, 5));
  // phi reads off coordinates.
  DeterministicRng rng(2);
  AlgebraElement h = rng.element(A);
  CHECK(c.hopf.phi(h) == h.coords());
}

TEST_CASE("cyclic idempotents at n = 2") {
  Field f7 = Field::prime(7);
  CyclicAlgebra c = build_cyclic(2, f7);
  auto idem = cyclic_idempotents(c);
  REQUIRE(idem.size() == 2);
  Scalar half = f7.from_integer(2).inverse();
  const StructureAlgebra& A = c.hopf.algebra();
  AlgebraElement e0 = (A.basis_element(0) + A.basis_element(1)) * half;
  AlgebraElement e1 = (A.basis_element(0) - A.basis_element(1)) * half;
  CHECK(idem[0] == e0);
  CHECK(idem[1] == e1);
  CHECK(idem[0] * idem[1] == A.zero());
  CHECK(idem[0] * idem[0] == idem[0]);
  CHECK(idem[0] + idem[1] == A.unit());
  // No primitive 7th root over GF(2).
  CHECK_THROWS_AS(cyclic_idempotents(build_cyclic(7, Field::prime(2))),
                  NoSuchRoot);
}

TEST_CASE("cyclic dual codes match the reversed parity check") {
  // Hamming: n = 7 over GF(2), g = 1 + X + X^3.
  Field f2 = Field::prime(2);
  CyclicAlgebra c7 = build_cyclic(7, f2);
  Poly g = {f2.one(), f2.one(), f2.zero(), f2.one()};
  CyclicCode code(7, f2, g);
  CHECK(code.dim() == 4);
  CyclicDualResult dual = cyclic_dual(c7, code);
  // h = 1 + X + X^2 + X^4, g_perp = 1 + X^2 + X^3 + X^4.
  Poly h_expected = {f2.one(), f2.one(), f2.one(), f2.zero(), f2.one()};
  Poly gp_expected = {f2.one(), f2.zero(), f2.one(), f2.one(), f2.one()};
  CHECK(poly_equal(dual.parity_check, h_expected));
  CHECK(poly_equal(dual.dual.generator, gp_expected));
  CHECK(dual.agree);

  // n = 4 over GF(3), g = X - 1.
  Field f3 = Field::prime(3);
  CyclicAlgebra c4 = build_cyclic(4, f3);
  CyclicCode code2(4, f3, {f3.from_integer(-1), f3.one()});
  CyclicDualResult dual2 = cyclic_dual(c4, code2);
  Poly h2 = {f3.one(), f3.one(), f3.one(), f3.one()};
  CHECK(poly_equal(dual2.parity_check, h2));
  CHECK(poly_equal(dual2.dual.generator, h2));
  CHECK(dual2.agree);

  // Full code: dual is the zero code.
  CyclicCode full(4, f3, {f3.one()});
  CyclicDualResult dual3 = cyclic_dual(c4, full);
  CHECK(dual3.dual.dim() == 0);
  CHECK(dual3.orthogonal.dim() == 0);
  CHECK(dual3.agree);

  CHECK_THROWS_AS(CyclicCode(4, f3, {f3.one(), f3.one(), f3.one()}), NotADivisor);
}

TEST_CASE("taft algebra structure identities") {
  Field f7 = Field::prime(7);
  for (unsigned N : {2u, 3u}) {
    TaftAlgebra t = build_taft(N, f7, f7.root_of_unity(N));
    const StructureAlgebra& A = t.omega.algebra();
    AlgebraElement x = t.omega.x_power(1);
    Scalar inv_n = f7.from_integer(N).inverse();
    // lambda(x^m e_s) = (1/N) q^s delta_{m,N-1}.
    for (unsigned m = 0; m < N; ++m)
      for (unsigned s = 0; s < N; ++s) {
        Scalar expected =
            m == N - 1 ? t.q.pow(static_cast<long long>(s)) * inv_n
                       : f7.zero();
        CHECK(t.hopf.integral(x.pow(m) * t.omega.idempotent(s)) == expected);
      }
    // S^2(x^m) = q^{-m} x^m and e_t x^m = x^m e_{t+m}.
    for (unsigned m = 0; m < N; ++m) {
      CHECK(t.hopf.antipode(t.hopf.antipode(x.pow(m))) ==
            x.pow(m) * t.q.pow(-static_cast<long long>(m)));
      for (unsigned tt = 0; tt < N; ++tt)
        CHECK(t.omega.idempotent(tt) * x.pow(m) ==
              x.pow(m) * t.omega.idempotent((tt + m) % N));
    }
    // Monomial-basis conversions invert each other.
    Matrix conv = taft_monomial_basis_matrix(t);
    CHECK(conv * conv.inverse() == Matrix::identity(f7, N * N));
    CHECK(A.dim() == N * N);
  }
}

TEST_CASE("sweedler pairing values") {
  Field f7 = Field::prime(7);
  TaftAlgebra t = build_taft(2, f7, f7.root_of_unity(2));
  const BilinearForm& form = t.hopf.integral_form();
  Scalar half = f7.from_integer(2).inverse();
  AlgebraElement e0 = t.omega.idempotent(0);
  AlgebraElement e1x = t.omega.basis(1, 1);
  CHECK(form.pair(e0, e1x) == half);
  CHECK(form.pair(e0, e0).is_zero());
  // Cross-check through the integral directly: <x,y> = lambda[y S(x)].
  CHECK(t.hopf.integral(e1x * t.hopf.antipode(e0)) == half);
  // gamma is right multiplication by g.
  NakayamaMap gamma = form.nakayama();
  DeterministicRng rng(4);
  for (int k = 0; k < 10; ++k) {
    AlgebraElement h = rng.element(t.omega.algebra());
    CHECK(t.omega.algebra().element(gamma.apply(h.coords())) == h * t.g);
  }
}

TEST_CASE("taft orthogonality theorem at N = 3") {
  Field f7 = Field::prime(7);
  TaftAlgebra t = build_taft(3, f7, f7.root_of_unity(3));
  OrthogonalCheck chk = taft_orthogonal_check(t, 1, 1);
  CHECK(chk.equal);
  CHECK(chk.left_right_agree);
  CHECK(chk.computed_right.dim() == 7);  // 9 - (3 - 1)
  // a = 1 reduces to the unscaled statement.
  AlgebraElement one = t.omega.algebra().unit();
  OrthogonalCheck scaled = taft_orthogonal_check(t, 1, 1, &one);
  CHECK(scaled.equal);
  CHECK(scaled.predicted == chk.predicted);
  // A non-invertible scaling unit is refused.
  AlgebraElement x = t.omega.x_power(1);
  CHECK_THROWS_AS(taft_orthogonal_check(t, 0, 0, &x), NotInvertible);
}

TEST_CASE("bosonization structure identities") {
  Field f7 = Field::prime(7);
  CdmmAlgebra c = build_cdmm(f7, f7.root_of_unity(6));
  const StructureAlgebra& A = c.omega.algebra();
  CHECK(A.dim() == 24);
  Scalar twelfth = f7.from_integer(12).inverse();
  // lambda(x^m e_{i,j}) = ((-1)^j / 12) delta_{m,1}.
  for (unsigned m = 0; m < 2; ++m)
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 6; ++j) {
        Scalar expected = m == 1 ? (j % 2 == 0 ? twelfth : -twelfth)
                                 : f7.zero();
        CHECK(c.hopf.integral(c.x.pow(m) * c.basis(i, j, 0)) == expected);
      }
  // e_{i,j} x^m = x^m e_{i,j+3m}.
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 6; ++j)
      for (unsigned m = 0; m < 2; ++m)
        CHECK(c.basis(i, j, 0) * c.x.pow(m) ==
              c.x.pow(m) * c.basis(i, (j + 3 * m) % 6, 0));
  // <e_{0,0}, x e_{0,0}> = 1/12, also via the integral directly.
  AlgebraElement e00 = c.basis(0, 0, 0);
  CHECK(c.hopf.integral_form().pair(e00, c.x * e00) == twelfth);
  CHECK(c.hopf.integral(c.x * e00 * c.hopf.antipode(e00)) == twelfth);
  // Wrong roots are refused.
  CHECK_THROWS_AS(build_cdmm(f7, f7.one()), NoSuchRoot);
}

TEST_CASE("bosonization orthogonality theorem") {
  Field f7 = Field::prime(7);
  CdmmAlgebra c = build_cdmm(f7, f7.root_of_unity(6));
  OrthogonalCheck chk = cdmm_orthogonal_check(c, 0, 0, 0);
  CHECK(chk.equal);
  CHECK(chk.computed_right.dim() == 22);  // 24 - 2
  AlgebraElement one = c.omega.algebra().unit();
  OrthogonalCheck scaled = cdmm_orthogonal_check(c, 0, 0, 0, &one);
  CHECK(scaled.predicted == chk.predicted);
  CHECK(scaled.equal);
  CHECK_THROWS_AS(cdmm_orthogonal_check(c, 2, 0, 0), IndexOutOfRange);
}

TEST_CASE("hopf axioms hold for the named algebras") {
  Field f7 = Field::prime(7);
  CHECK(verify_hopf_axioms(build_cyclic(4, Field::prime(3)).hopf).all());
  CHECK(verify_hopf_axioms(build_taft(2, f7, f7.root_of_unity(2)).hopf).all());
  CHECK(
      verify_hopf_axioms(build_cdmm(f7, f7.root_of_unity(6)).hopf).all());
}

TEST_CASE("nakayama automorphism of the Frobenius form") {
  Field f7 = Field::prime(7);
  // Commutative case: eta is the identity.
  CyclicAlgebra c = build_cyclic(6, f7);
  CHECK(c.hopf.nakayama_eta() == Matrix::identity(f7, 6));
  // Taft: eta restricted to R is S^2.
  TaftAlgebra t = build_taft(3, f7, f7.root_of_unity(3));
  Matrix eta = t.hopf.nakayama_eta();
  CHECK(t.omega.algebra().element(eta.apply(t.omega.algebra().unit_coords())) ==
        t.omega.algebra().unit());
  for (unsigned k = 0; k < 3; ++k) {
    AlgebraElement xk = t.omega.x_power(k);
    CHECK(t.omega.algebra().element(eta.apply(xk.coords())) ==
          t.hopf.antipode(t.hopf.antipode(xk)));
  }
}

TEST_CASE("cyclotomic smoke: named algebras over exact rationals") {
  // Cyclic group algebra over Q(zeta_6).
  Field fc = Field::cyclotomic(6);
  CyclicAlgebra c = build_cyclic(6, fc);
  CHECK(c.hopf.integral_form().gram() == Matrix::identity(fc, 6));
  auto idem = cyclic_idempotents(c);
  CHECK(idem.size() == 6);
  AlgebraElement acc = c.hopf.algebra().zero();
  for (const auto& e : idem) acc = acc + e;
  CHECK(acc == c.hopf.algebra().unit());
  // Sweedler over Q(zeta_4) with q = -1.
  Field f4 = Field::cyclotomic(4);
  TaftAlgebra t = build_taft(2, f4, f4.root_of_unity(2));
  CHECK(t.omega.algebra().dim() == 4);
  OrthogonalCheck chk = taft_orthogonal_check(t, 0, 0);
  CHECK(chk.equal);
}

TEST_CASE("asymmetric orthogonality witness exists for Taft at N = 3") {
  Field f7 = Field::prime(7);
  TaftAlgebra t = build_taft(3, f7, f7.root_of_unity(3));
  auto witness = find_asymmetric_orthogonality_witness(
      t.hopf.integral_form(), t.omega.algebra());
  REQUIRE(witness.has_value());
  const auto& [x, y] = *witness;
  CHECK(t.hopf.integral_form().pair(x, y).is_zero());
  CHECK_FALSE(t.hopf.integral_form().pair(y, x).is_zero());
}
