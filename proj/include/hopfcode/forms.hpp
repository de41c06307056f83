// Monomial bilinear forms on based spaces: Gram matrices, monomiality
// certificates, left/right orthogonals, Nakayama maps, the four induced
// module actions, and the closed-form orthogonals of the canonical forms on
// the omega algebras.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfcode/omega.hpp"

namespace hopfcode {

bool is_permutation(const std::vector<unsigned>& images, std::size_t n);

// sigma and per-index nonzero coefficients: <v_i, v_j> = d_i delta_{sigma(i), j}.
struct MonomialFormSpec {
  std::vector<unsigned> sigma;
  std::vector<Scalar> d;

  // Throws InvalidPermutation / ZeroCoefficient.
  void validate() const;
};

// Certificate iff each row of the square matrix has exactly one nonzero
// entry and the nonzero-column map is a permutation.
std::optional<MonomialFormSpec> detect_monomial(const Matrix& gram);

// The Nakayama isomorphism of a non-degenerate form: the unique linear map
// with <x, y> = <y, gamma(x)> for all x, y, as a column-convention matrix.
// For monomial forms it is the monomial transformation (sigma^2, d_i/d_sigma(i)),
// carried as a certificate.
struct NakayamaMap {
  Matrix matrix;
  std::optional<std::pair<std::vector<unsigned>, std::vector<Scalar>>>
      monomial;  // (tau, c)

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    return matrix.apply(v);
  }
};

class BilinearForm {
 public:
  // Gram matrix with entry d_i at column sigma(i) of row i; certificate
  // attached.
  static BilinearForm from_monomial(const Field& field,
                                    MonomialFormSpec spec);
  // Explicit pairing; a monomial certificate is attached when detected.
  static BilinearForm from_gram(Matrix gram);

  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  const Field& field() const { return gram_.field(); }
  const std::optional<MonomialFormSpec>& certificate() const {
    return certificate_;
  }

  bool non_degenerate() const;
  // Throws DegenerateForm when singular.
  const Matrix& gram_inverse() const;

  // <x, y> for coordinate vectors.
  Scalar pair(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  Scalar pair(const AlgebraElement& x, const AlgebraElement& y) const {
    return pair(x.coords(), y.coords());
  }

  // W^{perp_L} = {x : <x, y> = 0 for all y in W}; W^{perp_R} flips the slots.
  Subspace orthogonal_left(const Subspace& w) const;
  Subspace orthogonal_right(const Subspace& w) const;

  // Verified against the defining identity on all basis pairs.
  NakayamaMap nakayama() const;

 private:
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {}
  Matrix gram_;
  std::optional<MonomialFormSpec> certificate_;
  mutable std::optional<Matrix> inverse_;
  mutable std::optional<int> nondegenerate_;
};

// The four induced actions of an algebra on itself through a non-degenerate
// form (unique by non-degeneracy):
//   action_tl: x <| c   with <x <| c, y> = <x, c y>
//   action_bl: y <<| c  with <x, y <<| c> = <c x, y>
//   action_tr: c |> x   with <c |> x, y> = <x, y c>
//   action_br: c |>> y  with <x, c |>> y> = <x c, y>
Matrix action_matrix_tl(const BilinearForm& form, const AlgebraElement& c);
Matrix action_matrix_bl(const BilinearForm& form, const AlgebraElement& c);
Matrix action_matrix_tr(const BilinearForm& form, const AlgebraElement& c);
Matrix action_matrix_br(const BilinearForm& form, const AlgebraElement& c);

AlgebraElement action_tl(const BilinearForm& form, const AlgebraElement& x,
                         const AlgebraElement& c);
AlgebraElement action_bl(const BilinearForm& form, const AlgebraElement& y,
                         const AlgebraElement& c);
AlgebraElement action_tr(const BilinearForm& form, const AlgebraElement& c,
                         const AlgebraElement& x);
AlgebraElement action_br(const BilinearForm& form, const AlgebraElement& c,
                         const AlgebraElement& y);

// Subspace transports: left/right multiplication images and action images.
Subspace left_multiply(const AlgebraElement& a, const Subspace& w);
Subspace right_multiply(const Subspace& w, const AlgebraElement& a);

// The canonical form on an omega algebra:
//   <e_s x^m, e_t x^n> = d_(s,m) delta_{mu(s),t} delta_{nu(m),n}.
struct CanonicalFormSpec {
  std::vector<unsigned> mu;  // permutation of S
  std::vector<unsigned> nu;  // permutation of {0..N-1}
  std::vector<Scalar> d;     // indexed by OmegaSpec::index_of(s, m)

  void validate(const OmegaSpec& spec) const;
  bool nu_is_reversal(unsigned capN) const;
  MonomialFormSpec monomial_spec(const OmegaSpec& spec) const;
};

BilinearForm canonical_form(const OmegaAlgebra& alg,
                            const CanonicalFormSpec& spec);

// Closed-form orthogonal of N_{s,m}: the sum of all N_{t,0} with
// t != mu(s), plus N_{mu(s), N-m} when m > 0; also identifies
// N_{s,m}^{perp_R} with N_{mu^2(s), m}^{perp_L}. Requires the reversal
// hypothesis nu(m) = N-1-m (HypothesisViolated otherwise).
struct PredictedOrthogonal {
  Subspace right_orthogonal;
  unsigned left_s = 0;  // N_{s,m}^{perp_R} = N_{left_s, left_m}^{perp_L}
  unsigned left_m = 0;
};

PredictedOrthogonal predicted_orthogonal_ideal(const OmegaAlgebra& alg,
                                               const CanonicalFormSpec& spec,
                                               unsigned s, unsigned m);

}  // namespace hopfcode
