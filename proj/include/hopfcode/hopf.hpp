// Hopf layer: coproducts, counits, antipodes, integrals, the isomorphism
// phi : H -> H* and its inverse, the integral-induced bilinear form, the
// Frobenius form with its Nakayama automorphism, and the three named Hopf
// algebras (cyclic group algebra, Taft algebra, and a 24-dimensional
// bosonization) together with their orthogonality theorems and the
// cyclic-code bridge.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcode/forms.hpp"
#include "hopfcode/polynomial.hpp"

namespace hopfcode {

// Sparse element of the tensor square A (x) A in basis v_i (x) v_j.
struct TensorElement {
  std::map<std::pair<unsigned, unsigned>, Scalar> terms;

  void add_term(unsigned i, unsigned j, const Scalar& c);
  TensorElement& accumulate(const TensorElement& o, const Scalar& factor);
  TensorElement scaled(const Scalar& c) const;
  bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

TensorElement tensor_of(const AlgebraElement& a, const AlgebraElement& b);
TensorElement tensor_mul(const StructureAlgebra& alg, const TensorElement& a,
                         const TensorElement& b);
TensorElement tensor_pow(const StructureAlgebra& alg, const TensorElement& a,
                         unsigned e);

class HopfStructure {
 public:
  // Verifies coassociativity, the counit axiom, the antipode axiom, and the
  // left-integral property of lambda on every basis element; computes the
  // antipode inverse, the integral form, and the right integral
  // t = phi^{-1}(counit), checking t h = counit(h) t and lambda(t) = 1 and
  // phi . phi^{-1} = id. Throws Error when any of these fail.
  HopfStructure(StructureAlgebra alg, std::vector<TensorElement> coproduct,
                std::vector<Scalar> counit, Matrix antipode,
                std::vector<Scalar> integral,
                std::optional<AlgebraElement> gamma_grouplike,
                std::optional<Scalar> distinguished_root);

  const StructureAlgebra& algebra() const;
  std::size_t dim() const;
  const Field& field() const;

  const TensorElement& coproduct(std::size_t i) const;
  TensorElement coproduct_of(const AlgebraElement& h) const;
  const std::vector<Scalar>& counit_values() const;
  Scalar counit(const AlgebraElement& h) const;
  const Matrix& antipode_matrix() const;
  const Matrix& antipode_inverse_matrix() const;
  AlgebraElement antipode(const AlgebraElement& h) const;
  AlgebraElement antipode_inverse(const AlgebraElement& h) const;
  const std::vector<Scalar>& integral_values() const;  // lambda on basis
  Scalar integral(const AlgebraElement& h) const;      // lambda(h)
  // <x, y> = lambda[y S(x)]; non-degenerate.
  const BilinearForm& integral_form() const;
  // t = phi^{-1}(counit); a right integral with lambda(t) = 1.
  const AlgebraElement& right_integral() const;
  // Element g with gamma(h) = h g for the named algebras (when known).
  const std::optional<AlgebraElement>& gamma_grouplike() const;
  const std::optional<Scalar>& distinguished_root() const;

  // phi(h) = lambda <- h, as its value vector on the basis.
  std::vector<Scalar> phi(const AlgebraElement& h) const;
  // phi^{-1}(f) = sum t_1 f(t_2) for f given by values on the basis.
  AlgebraElement phi_inverse(const std::vector<Scalar>& f_values) const;

  // Nakayama automorphism eta of the Frobenius form b(x,y) = lambda(x y):
  // lambda(x y) = lambda(y eta(x)); verified to be an algebra map.
  Matrix nakayama_eta() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

struct HopfAxiomReport {
  bool coassociative = false;
  bool counit_ok = false;
  bool antipode_ok = false;
  bool antipode_antimultiplicative = false;
  bool integral_ok = false;
  bool balanced_ok = false;  // <x h, y> = <x, y S(h)> on sampled triples
  bool sposto_ok = false;    // sum <x_1,y> x_2 = sum y_1 <x,y_2> on samples
  std::vector<std::string> failures;

  bool all() const {
    return coassociative && counit_ok && antipode_ok &&
           antipode_antimultiplicative && integral_ok && balanced_ok &&
           sposto_ok;
  }
};

HopfAxiomReport verify_hopf_axioms(const HopfStructure& h,
                                   unsigned samples = 16,
                                   std::uint64_t seed = 1);

// ---- cyclic group algebra ----

struct CyclicAlgebra {
  unsigned n = 0;
  HopfStructure hopf;
};

CyclicAlgebra build_cyclic(unsigned n, const Field& field);

// e_t = (1/n) sum_i q^{t i} x^i for the smallest primitive n-th root q.
// Throws NoSuchRoot when the field has none.
std::vector<AlgebraElement> cyclic_idempotents(const CyclicAlgebra& c);

// ---- Taft algebra ----

struct TaftAlgebra {
  unsigned N = 0;
  Scalar q;
  OmegaAlgebra omega;       // basis e_s x^m with omega(s) = s+1 mod N
  HopfStructure hopf;       // on the same underlying algebra
  CanonicalFormSpec closed_form;  // (mu, nu, d) of the integral form
  AlgebraElement g;
};

// q must be a primitive N-th root of unity in the field (NoSuchRoot).
TaftAlgebra build_taft(unsigned N, const Field& field, const Scalar& q);

// Coordinates of x^xpow g^gpow in the e_s x^m basis.
AlgebraElement taft_monomial(const TaftAlgebra& t, unsigned xpow,
                             unsigned gpow);
// Change of basis with column (xpow * N + gpow) holding x^xpow g^gpow; its
// inverse converts back to the monomial basis.
Matrix taft_monomial_basis_matrix(const TaftAlgebra& t);

// ---- 24-dimensional bosonization ----

struct CdmmAlgebra {
  Scalar zeta;              // primitive 6th root of unity
  OmegaAlgebra omega;       // |S| = 12 indexed by (i,j), N = 2
  HopfStructure hopf;
  CanonicalFormSpec closed_form;
  AlgebraElement a, b, g, x;

  unsigned sidx(unsigned i, unsigned j) const { return i * 6 + j % 6; }
  AlgebraElement basis(unsigned i, unsigned j, unsigned m) const {
    return omega.basis(sidx(i, j), m);
  }
  RightSubmodule ideal(unsigned s, unsigned t, unsigned m) const {
    return omega.ideal(sidx(s, t), m);
  }
};

// zeta must be a primitive 6th root of unity; the characteristic must not
// divide 12 (NoSuchRoot / BadCharacteristic).
CdmmAlgebra build_cdmm(const Field& field, const Scalar& zeta);

// ---- orthogonality theorems ----

struct OrthogonalCheck {
  Subspace predicted;
  Subspace computed_left;
  Subspace computed_right;
  bool left_right_agree = false;
  bool equal = false;  // predicted == computed on both sides
};

// N_{s,0}^perp = sum of N_{t,0} over t != 1-s (mod N);
// N_{s,m}^perp = N_{s,0}^perp + N_{1-s, N-m};
// (a N_{s,m})^perp = S(a^{-1}) N_{s,m}^perp for an invertible a in R.
OrthogonalCheck taft_orthogonal_check(const TaftAlgebra& t, unsigned s,
                                      unsigned m,
                                      const AlgebraElement* unit_a = nullptr);

// N_{s,t,0}^perp = (sum_j N_{1-s,j,0}) + (sum over j != (-1)^{s+1} t + 3 of
// N_{s,j,0}); N_{s,t,m}^perp adds N_{s, (-1)^{s+1} t + 3, 2-m}; scaling by a
// unit a in R transports by S(a^{-1}).
OrthogonalCheck cdmm_orthogonal_check(const CdmmAlgebra& c, unsigned s,
                                      unsigned t, unsigned m,
                                      const AlgebraElement* unit_a = nullptr);

// ---- cyclic codes ----

struct CyclicCode {
  unsigned length = 0;
  Field field;
  Poly generator;  // monic, divides X^n - 1

  // Normalizes to monic; throws NotADivisor if g does not divide X^n - 1.
  CyclicCode(unsigned n, Field f, Poly gen);
  unsigned dim() const {
    return length - static_cast<unsigned>(poly_degree(generator));
  }
};

// The ideal (g(x)) as a subspace of the cyclic algebra's coordinate space.
Subspace code_subspace(const CyclicAlgebra& c, const CyclicCode& code);

struct CyclicDualResult {
  Poly parity_check;        // h = (X^n - 1) / g
  CyclicCode dual;          // generated by g_perp = h0^{-1} X^d h(X^{-1})
  Subspace orthogonal;      // kernel-computed orthogonal of the ideal
  bool agree = false;       // ideal(g_perp) == orthogonal
};

CyclicDualResult cyclic_dual(const CyclicAlgebra& c, const CyclicCode& code);

}  // namespace hopfcode
