#include "hopfcode/forms.hpp"

namespace hopfcode {

bool is_permutation(const std::vector<unsigned>& images, std::size_t n) {
  if (images.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (unsigned img : images) {
    if (img >= n || hit[img]) return false;
    hit[img] = true;
  }
  return true;
}

void MonomialFormSpec::validate() const {
  if (!is_permutation(sigma, sigma.size()))
    throw InvalidPermutation("sigma is not a permutation");
  if (d.size() != sigma.size())
    throw ZeroCoefficient("coefficient list has wrong length");
  for (const auto& c : d)
    if (c.is_zero()) throw ZeroCoefficient("monomial coefficients must be nonzero");
}

std::optional<MonomialFormSpec> detect_monomial(const Matrix& gram) {
  if (gram.rows() != gram.cols()) return std::nullopt;
  const std::size_t n = gram.rows();
  MonomialFormSpec spec;
  spec.sigma.resize(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nonzero_col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (gram.at(i, j).is_zero()) continue;
      if (nonzero_col != n) return std::nullopt;  // two nonzeros in a row
      nonzero_col = j;
    }
    if (nonzero_col == n || hit[nonzero_col]) return std::nullopt;
    hit[nonzero_col] = true;
    spec.sigma[i] = static_cast<unsigned>(nonzero_col);
    spec.d.push_back(gram.at(i, nonzero_col));
  }
  return spec;
}

BilinearForm BilinearForm::from_monomial(const Field& field,
                                         MonomialFormSpec spec) {
  spec.validate();
  const std::size_t n = spec.sigma.size();
  Matrix gram(field, n, n);
  for (std::size_t i = 0; i < n; ++i) gram.at(i, spec.sigma[i]) = spec.d[i];
  BilinearForm form(std::move(gram));
  form.certificate_ = std::move(spec);
  form.nondegenerate_ = 1;  // monomial implies non-degenerate
  return form;
}

BilinearForm BilinearForm::from_gram(Matrix gram) {
  if (gram.rows() != gram.cols())
    throw AmbientMismatch("Gram matrix must be square");
  BilinearForm form(std::move(gram));
  form.certificate_ = detect_monomial(form.gram_);
  if (form.certificate_) form.nondegenerate_ = 1;
  return form;
}

bool BilinearForm::non_degenerate() const {
  if (!nondegenerate_)
    nondegenerate_ = gram_.rank() == gram_.rows() ? 1 : 0;
  return *nondegenerate_ == 1;
}

const Matrix& BilinearForm::gram_inverse() const {
  if (!non_degenerate()) throw DegenerateForm("singular Gram matrix");
  if (!inverse_) inverse_ = gram_.inverse();
  return *inverse_;
}

Scalar BilinearForm::pair(const std::vector<Scalar>& x,
                          const std::vector<Scalar>& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw AmbientMismatch("pairing vector length");
  Scalar acc = field().zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      const Scalar& g = gram_.at(i, j);
      if (!g.is_zero() && !y[j].is_zero()) acc += x[i] * g * y[j];
    }
  }
  return acc;
}

Subspace BilinearForm::orthogonal_left(const Subspace& w) const {
  if (w.ambient_dim() != dim()) throw AmbientMismatch("orthogonal_left");
  if (!non_degenerate()) throw DegenerateForm("orthogonal of a degenerate form");
  // x in W^{perp_L}  iff  (B G^T) x = 0 for the basis matrix B of W.
  return kernel(w.basis() * gram_.transpose());
}

Subspace BilinearForm::orthogonal_right(const Subspace& w) const {
  if (w.ambient_dim() != dim()) throw AmbientMismatch("orthogonal_right");
  if (!non_degenerate()) throw DegenerateForm("orthogonal of a degenerate form");
  return kernel(w.basis() * gram_);
}

NakayamaMap BilinearForm::nakayama() const {
  if (!non_degenerate()) throw DegenerateForm("Nakayama of a degenerate form");
  NakayamaMap out{Matrix(field(), dim(), dim()), std::nullopt};
  if (certificate_) {
    const auto& sigma = certificate_->sigma;
    const auto& d = certificate_->d;
    std::vector<unsigned> tau(dim());
    std::vector<Scalar> c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      tau[i] = sigma[sigma[i]];
      c.push_back(d[i] / d[sigma[i]]);
      out.matrix.at(tau[i], i) = c.back();
    }
    out.monomial = std::make_pair(std::move(tau), std::move(c));
  } else {
    // gamma solves <v_i, v_j> = <v_j, gamma(v_i)>, i.e. G^T = G * M.
    out.matrix = gram_inverse() * gram_.transpose();
  }
  if (gram_.transpose() != gram_ * out.matrix)
    throw Error("Nakayama map fails its defining identity");
  return out;
}

namespace {

Matrix conjugate_transport(const BilinearForm& form, const Matrix& mult,
                           bool transpose_gram) {
  const Matrix& g = form.gram();
  const Matrix& ginv = form.gram_inverse();
  if (transpose_gram)
    return ginv.transpose() * mult.transpose() * g.transpose();
  return ginv * mult.transpose() * g;
}

}  // namespace

Matrix action_matrix_tl(const BilinearForm& form, const AlgebraElement& c) {
  return conjugate_transport(form, c.algebra().left_mult_matrix(c), true);
}
Matrix action_matrix_bl(const BilinearForm& form, const AlgebraElement& c) {
  return conjugate_transport(form, c.algebra().left_mult_matrix(c), false);
}
Matrix action_matrix_tr(const BilinearForm& form, const AlgebraElement& c) {
  return conjugate_transport(form, c.algebra().right_mult_matrix(c), true);
}
Matrix action_matrix_br(const BilinearForm& form, const AlgebraElement& c) {
  return conjugate_transport(form, c.algebra().right_mult_matrix(c), false);
}

AlgebraElement action_tl(const BilinearForm& form, const AlgebraElement& x,
                         const AlgebraElement& c) {
  return x.algebra().element(action_matrix_tl(form, c).apply(x.coords()));
}
AlgebraElement action_bl(const BilinearForm& form, const AlgebraElement& y,
                         const AlgebraElement& c) {
  return y.algebra().element(action_matrix_bl(form, c).apply(y.coords()));
}
AlgebraElement action_tr(const BilinearForm& form, const AlgebraElement& c,
                         const AlgebraElement& x) {
  return x.algebra().element(action_matrix_tr(form, c).apply(x.coords()));
}
AlgebraElement action_br(const BilinearForm& form, const AlgebraElement& c,
                         const AlgebraElement& y) {
  return y.algebra().element(action_matrix_br(form, c).apply(y.coords()));
}

Subspace left_multiply(const AlgebraElement& a, const Subspace& w) {
  return map_subspace(a.algebra().left_mult_matrix(a), w);
}

Subspace right_multiply(const Subspace& w, const AlgebraElement& a) {
  return map_subspace(a.algebra().right_mult_matrix(a), w);
}

void CanonicalFormSpec::validate(const OmegaSpec& spec) const {
  if (!is_permutation(mu, spec.s_size))
    throw InvalidPermutation("mu is not a permutation of S");
  if (!is_permutation(nu, spec.capN))
    throw InvalidPermutation("nu is not a permutation of {0..N-1}");
  if (d.size() != spec.dim())
    throw ZeroCoefficient("coefficient list has wrong length");
  for (const auto& c : d)
    if (c.is_zero()) throw ZeroCoefficient("form coefficients must be nonzero");
}

bool CanonicalFormSpec::nu_is_reversal(unsigned capN) const {
  for (unsigned m = 0; m < capN; ++m)
    if (nu[m] != capN - 1 - m) return false;
  return true;
}

MonomialFormSpec CanonicalFormSpec::monomial_spec(const OmegaSpec& spec) const {
  validate(spec);
  MonomialFormSpec out;
  out.sigma.resize(spec.dim());
  out.d = d;
  for (unsigned s = 0; s < spec.s_size; ++s)
    for (unsigned m = 0; m < spec.capN; ++m)
      out.sigma[spec.index_of(s, m)] =
          static_cast<unsigned>(spec.index_of(mu[s], nu[m]));
  return out;
}

BilinearForm canonical_form(const OmegaAlgebra& alg,
                            const CanonicalFormSpec& spec) {
  return BilinearForm::from_monomial(alg.field(),
                                     spec.monomial_spec(alg.spec()));
}

PredictedOrthogonal predicted_orthogonal_ideal(const OmegaAlgebra& alg,
                                               const CanonicalFormSpec& spec,
                                               unsigned s, unsigned m) {
  const OmegaSpec& os = alg.spec();
  spec.validate(os);
  if (s >= os.s_size || m >= os.capN)
    throw IndexOutOfRange("ideal index (s, m)");
  if (!spec.nu_is_reversal(os.capN))
    throw HypothesisViolated("nu is not the reversal m -> N-1-m");
  Subspace acc = Subspace::zero(alg.field(), os.dim());
  for (unsigned t = 0; t < os.s_size; ++t) {
    if (t == spec.mu[s]) continue;
    acc = subspace_sum(acc, alg.ideal(t, 0).space());
  }
  if (m > 0)
    acc = subspace_sum(acc, alg.ideal(spec.mu[s], os.capN - m).space());
  PredictedOrthogonal out{std::move(acc), spec.mu[spec.mu[s]], m};
  return out;
}

}  // namespace hopfcode
