#include "hopfcode/hopf.hpp"

#include <tuple>

#include "hopfcode/random.hpp"

namespace hopfcode {

void TensorElement::add_term(unsigned i, unsigned j, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

TensorElement& TensorElement::accumulate(const TensorElement& o,
                                         const Scalar& factor) {
  for (const auto& [key, c] : o.terms)
    add_term(key.first, key.second, c * factor);
  return *this;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
  TensorElement out;
  for (const auto& [key, v] : terms) out.add_term(key.first, key.second, v * c);
  return out;
}

TensorElement tensor_of(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement out;
  for (unsigned i = 0; i < a.coords().size(); ++i) {
    if (a.coord(i).is_zero()) continue;
    for (unsigned j = 0; j < b.coords().size(); ++j)
      if (!b.coord(j).is_zero()) out.add_term(i, j, a.coord(i) * b.coord(j));
  }
  return out;
}

TensorElement tensor_mul(const StructureAlgebra& alg, const TensorElement& a,
                         const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const auto& left = alg.product_coords(ka.first, kb.first);
      const auto& right = alg.product_coords(ka.second, kb.second);
      Scalar f = ca * cb;
      for (unsigned u = 0; u < alg.dim(); ++u) {
        if (left[u].is_zero()) continue;
        for (unsigned w = 0; w < alg.dim(); ++w)
          if (!right[w].is_zero())
            out.add_term(u, w, f * left[u] * right[w]);
      }
    }
  return out;
}

TensorElement tensor_pow(const StructureAlgebra& alg, const TensorElement& a,
                         unsigned e) {
  TensorElement acc = tensor_of(alg.unit(), alg.unit());
  for (unsigned i = 0; i < e; ++i) acc = tensor_mul(alg, acc, a);
  return acc;
}

// ---------------------------------------------------------------------------

struct HopfStructure::Data {
  StructureAlgebra alg;
  std::vector<TensorElement> coproduct;
  std::vector<Scalar> counit;
  Matrix antipode;
  Matrix antipode_inv;
  std::vector<Scalar> integral;
  std::optional<AlgebraElement> gamma_grouplike;
  std::optional<Scalar> root;
  std::optional<BilinearForm> form;
  std::optional<AlgebraElement> right_integral;

  Data(StructureAlgebra a, Matrix s)
      : alg(std::move(a)), antipode(std::move(s)), antipode_inv(alg.field(), 0, 0) {}
};

namespace {

using Tensor3 = std::map<std::tuple<unsigned, unsigned, unsigned>, Scalar>;

void add3(Tensor3& t, unsigned i, unsigned j, unsigned k, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_tuple(i, j, k);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

bool check_coassociativity(const StructureAlgebra& alg,
                           const std::vector<TensorElement>& cop,
                           std::vector<std::string>* failures) {
  bool ok = true;
  for (unsigned v = 0; v < alg.dim(); ++v) {
    Tensor3 lhs, rhs;
    for (const auto& [key, c] : cop[v].terms) {
      for (const auto& [k2, c2] : cop[key.first].terms)
        add3(lhs, k2.first, k2.second, key.second, c * c2);
      for (const auto& [k2, c2] : cop[key.second].terms)
        add3(rhs, key.first, k2.first, k2.second, c * c2);
    }
    if (lhs != rhs) {
      ok = false;
      if (failures)
        failures->push_back("coassociativity fails on " + alg.label(v));
    }
  }
  return ok;
}

bool check_counit(const StructureAlgebra& alg,
                  const std::vector<TensorElement>& cop,
                  const std::vector<Scalar>& eps,
                  std::vector<std::string>* failures) {
  bool ok = true;
  for (unsigned v = 0; v < alg.dim(); ++v) {
    std::vector<Scalar> left(alg.dim(), alg.field().zero());
    std::vector<Scalar> right(alg.dim(), alg.field().zero());
    for (const auto& [key, c] : cop[v].terms) {
      left[key.second] += eps[key.first] * c;
      right[key.first] += eps[key.second] * c;
    }
    std::vector<Scalar> expected(alg.dim(), alg.field().zero());
    expected[v] = alg.field().one();
    if (left != expected || right != expected) {
      ok = false;
      if (failures) failures->push_back("counit axiom fails on " + alg.label(v));
    }
  }
  return ok;
}

bool check_antipode_axiom(const StructureAlgebra& alg,
                          const std::vector<TensorElement>& cop,
                          const std::vector<Scalar>& eps, const Matrix& s,
                          std::vector<std::string>* failures) {
  bool ok = true;
  for (unsigned v = 0; v < alg.dim(); ++v) {
    std::vector<Scalar> left(alg.dim(), alg.field().zero());
    std::vector<Scalar> right(alg.dim(), alg.field().zero());
    for (const auto& [key, c] : cop[v].terms) {
      // left: S(v_i) * v_j ; right: v_i * S(v_j)
      for (unsigned k = 0; k < alg.dim(); ++k) {
        const Scalar& ski = s.at(k, key.first);
        if (!ski.is_zero()) {
          const auto& prod = alg.product_coords(k, key.second);
          for (unsigned m = 0; m < alg.dim(); ++m)
            if (!prod[m].is_zero()) left[m] += c * ski * prod[m];
        }
        const Scalar& skj = s.at(k, key.second);
        if (!skj.is_zero()) {
          const auto& prod = alg.product_coords(key.first, k);
          for (unsigned m = 0; m < alg.dim(); ++m)
            if (!prod[m].is_zero()) right[m] += c * skj * prod[m];
        }
      }
    }
    std::vector<Scalar> expected = alg.unit_coords();
    for (auto& x : expected) x *= eps[v];
    if (left != expected || right != expected) {
      ok = false;
      if (failures)
        failures->push_back("antipode axiom fails on " + alg.label(v));
    }
  }
  return ok;
}

bool check_integral(const StructureAlgebra& alg,
                    const std::vector<TensorElement>& cop,
                    const std::vector<Scalar>& lambda,
                    std::vector<std::string>* failures) {
  bool ok = true;
  for (unsigned v = 0; v < alg.dim(); ++v) {
    std::vector<Scalar> acc(alg.dim(), alg.field().zero());
    for (const auto& [key, c] : cop[v].terms)
      acc[key.first] += c * lambda[key.second];
    std::vector<Scalar> expected = alg.unit_coords();
    for (auto& x : expected) x *= lambda[v];
    if (acc != expected) {
      ok = false;
      if (failures)
        failures->push_back("left-integral axiom fails on " + alg.label(v));
    }
  }
  return ok;
}

bool check_antimultiplicative(const StructureAlgebra& alg, const Matrix& s,
                              std::vector<std::string>* failures) {
  bool ok = true;
  for (unsigned i = 0; i < alg.dim(); ++i)
    for (unsigned j = 0; j < alg.dim(); ++j) {
      std::vector<Scalar> lhs = s.apply(alg.product_coords(i, j));
      AlgebraElement sj = alg.element(s.col(j));
      AlgebraElement si = alg.element(s.col(i));
      std::vector<Scalar> rhs = (sj * si).coords();
      if (lhs != rhs) {
        ok = false;
        if (failures)
          failures->push_back("S(ab) != S(b)S(a) on (" + alg.label(i) + ", " +
                              alg.label(j) + ")");
        break;
      }
    }
  return ok;
}

}  // namespace

HopfStructure::HopfStructure(StructureAlgebra alg,
                             std::vector<TensorElement> coproduct,
                             std::vector<Scalar> counit, Matrix antipode,
                             std::vector<Scalar> integral,
                             std::optional<AlgebraElement> gamma_grouplike,
                             std::optional<Scalar> distinguished_root) {
  auto data = std::make_shared<Data>(std::move(alg), std::move(antipode));
  const StructureAlgebra& A = data->alg;
  const std::size_t n = A.dim();
  if (coproduct.size() != n || counit.size() != n || integral.size() != n ||
      data->antipode.rows() != n || data->antipode.cols() != n)
    throw Error("Hopf data has inconsistent dimensions");
  data->coproduct = std::move(coproduct);
  data->counit = std::move(counit);
  data->integral = std::move(integral);
  data->gamma_grouplike = std::move(gamma_grouplike);
  data->root = std::move(distinguished_root);

  std::vector<std::string> failures;
  if (!check_coassociativity(A, data->coproduct, &failures) ||
      !check_counit(A, data->coproduct, data->counit, &failures) ||
      !check_antipode_axiom(A, data->coproduct, data->counit, data->antipode,
                            &failures) ||
      !check_integral(A, data->coproduct, data->integral, &failures))
    throw Error("Hopf structure verification failed: " + failures.front());

  try {
    data->antipode_inv = data->antipode.inverse();
  } catch (const NotInvertible&) {
    throw Error("antipode is not invertible");
  }

  // Integral form <x, y> = lambda[y S(x)].
  Matrix gram(A.field(), n, n);
  for (unsigned i = 0; i < n; ++i) {
    AlgebraElement si = A.element(data->antipode.col(i));
    for (unsigned j = 0; j < n; ++j) {
      AlgebraElement prod = A.basis_element(j) * si;
      Scalar acc = A.field().zero();
      for (unsigned k = 0; k < n; ++k)
        if (!prod.coord(k).is_zero())
          acc += prod.coord(k) * data->integral[k];
      gram.at(i, j) = acc;
    }
  }
  data->form = BilinearForm::from_gram(std::move(gram));
  if (!data->form->non_degenerate())
    throw DegenerateForm("integral form is degenerate");
  (void)data->form->gram_inverse();  // populate caches while still exclusive

  // t = phi^{-1}(counit): solve <t, v_j> = counit(v_j).
  std::vector<Scalar> t =
      data->form->gram_inverse().transpose().apply(data->counit);
  data->right_integral = A.element(t);
  const AlgebraElement& ti = *data->right_integral;
  for (unsigned i = 0; i < n; ++i) {
    AlgebraElement lhs = ti * A.basis_element(i);
    AlgebraElement rhs = ti * data->counit[i];
    if (lhs != rhs) throw Error("t is not a right integral");
  }
  Scalar lt = A.field().zero();
  for (unsigned k = 0; k < n; ++k)
    if (!ti.coord(k).is_zero()) lt += ti.coord(k) * data->integral[k];
  if (!lt.is_one()) throw Error("lambda(t) != 1");

  // phi . phi^{-1} = id: with T[i][j] the (i,j)-coordinate of Delta(t),
  // G^T T must be the identity.
  TensorElement dt;
  for (unsigned i = 0; i < n; ++i)
    if (!ti.coord(i).is_zero())
      dt.accumulate(data->coproduct[i], ti.coord(i));
  Matrix tmat(A.field(), n, n);
  for (const auto& [key, c] : dt.terms) tmat.at(key.first, key.second) = c;
  if (data->form->gram().transpose() * tmat != Matrix::identity(A.field(), n))
    throw Error("phi composed with phi^{-1} is not the identity");

  data_ = std::move(data);
}

const StructureAlgebra& HopfStructure::algebra() const { return data_->alg; }
std::size_t HopfStructure::dim() const { return data_->alg.dim(); }
const Field& HopfStructure::field() const { return data_->alg.field(); }
const TensorElement& HopfStructure::coproduct(std::size_t i) const {
  return data_->coproduct[i];
}

TensorElement HopfStructure::coproduct_of(const AlgebraElement& h) const {
  if (!data_->alg.same(h.algebra())) throw AlgebraMismatch("coproduct_of");
  TensorElement out;
  for (unsigned i = 0; i < dim(); ++i)
    if (!h.coord(i).is_zero()) out.accumulate(data_->coproduct[i], h.coord(i));
  return out;
}

const std::vector<Scalar>& HopfStructure::counit_values() const {
  return data_->counit;
}

Scalar HopfStructure::counit(const AlgebraElement& h) const {
  Scalar acc = field().zero();
  for (unsigned i = 0; i < dim(); ++i)
    if (!h.coord(i).is_zero()) acc += h.coord(i) * data_->counit[i];
  return acc;
}

const Matrix& HopfStructure::antipode_matrix() const {
  return data_->antipode;
}
const Matrix& HopfStructure::antipode_inverse_matrix() const {
  return data_->antipode_inv;
}

AlgebraElement HopfStructure::antipode(const AlgebraElement& h) const {
  return data_->alg.element(data_->antipode.apply(h.coords()));
}

AlgebraElement HopfStructure::antipode_inverse(const AlgebraElement& h) const {
  return data_->alg.element(data_->antipode_inv.apply(h.coords()));
}

const std::vector<Scalar>& HopfStructure::integral_values() const {
  return data_->integral;
}

Scalar HopfStructure::integral(const AlgebraElement& h) const {
  Scalar acc = field().zero();
  for (unsigned i = 0; i < dim(); ++i)
    if (!h.coord(i).is_zero()) acc += h.coord(i) * data_->integral[i];
  return acc;
}

const BilinearForm& HopfStructure::integral_form() const {
  return *data_->form;
}

const AlgebraElement& HopfStructure::right_integral() const {
  return *data_->right_integral;
}

const std::optional<AlgebraElement>& HopfStructure::gamma_grouplike() const {
  return data_->gamma_grouplike;
}

const std::optional<Scalar>& HopfStructure::distinguished_root() const {
  return data_->root;
}

std::vector<Scalar> HopfStructure::phi(const AlgebraElement& h) const {
  return data_->form->gram().transpose().apply(h.coords());
}

AlgebraElement HopfStructure::phi_inverse(
    const std::vector<Scalar>& f_values) const {
  if (f_values.size() != dim()) throw AmbientMismatch("phi_inverse");
  TensorElement dt = coproduct_of(right_integral());
  std::vector<Scalar> out(dim(), field().zero());
  for (const auto& [key, c] : dt.terms)
    if (!f_values[key.second].is_zero())
      out[key.first] += c * f_values[key.second];
  return data_->alg.element(std::move(out));
}

Matrix HopfStructure::nakayama_eta() const {
  const StructureAlgebra& A = data_->alg;
  const std::size_t n = dim();
  Matrix b(field(), n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const auto& prod = A.product_coords(i, j);
      Scalar acc = field().zero();
      for (unsigned k = 0; k < n; ++k)
        if (!prod[k].is_zero()) acc += prod[k] * data_->integral[k];
      b.at(i, j) = acc;
    }
  Matrix eta = [&] {
    try {
      return b.inverse() * b.transpose();
    } catch (const NotInvertible&) {
      throw DegenerateForm("Frobenius form is degenerate");
    }
  }();
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::vector<Scalar> lhs = eta.apply(A.product_coords(i, j));
      AlgebraElement ei = A.element(eta.col(i));
      AlgebraElement ej = A.element(eta.col(j));
      if (lhs != (ei * ej).coords())
        throw Error("Nakayama automorphism is not an algebra map");
    }
  return eta;
}

HopfAxiomReport verify_hopf_axioms(const HopfStructure& h, unsigned samples,
                                   std::uint64_t seed) {
  const StructureAlgebra& A = h.algebra();
  HopfAxiomReport r;
  std::vector<TensorElement> cop;
  for (unsigned i = 0; i < h.dim(); ++i) cop.push_back(h.coproduct(i));
  r.coassociative = check_coassociativity(A, cop, &r.failures);
  r.counit_ok = check_counit(A, cop, h.counit_values(), &r.failures);
  r.antipode_ok = check_antipode_axiom(A, cop, h.counit_values(),
                                       h.antipode_matrix(), &r.failures);
  r.integral_ok = check_integral(A, cop, h.integral_values(), &r.failures);
  r.antipode_antimultiplicative =
      check_antimultiplicative(A, h.antipode_matrix(), &r.failures);

  const BilinearForm& form = h.integral_form();
  DeterministicRng rng(seed);
  r.balanced_ok = true;
  r.sposto_ok = true;
  for (unsigned k = 0; k < samples; ++k) {
    AlgebraElement x = rng.element(A);
    AlgebraElement y = rng.element(A);
    AlgebraElement hh = rng.element(A);
    if (form.pair(x * hh, y) != form.pair(x, y * h.antipode(hh))) {
      r.balanced_ok = false;
      r.failures.push_back("balanced identity fails on a sampled triple");
      break;
    }
  }
  for (unsigned k = 0; k < samples; ++k) {
    AlgebraElement x = rng.element(A);
    AlgebraElement y = rng.element(A);
    std::vector<Scalar> lhs(A.dim(), A.field().zero());
    for (const auto& [key, c] : h.coproduct_of(x).terms) {
      Scalar p = form.pair(A.basis_element(key.first).coords(), y.coords());
      if (!p.is_zero()) lhs[key.second] += c * p;
    }
    std::vector<Scalar> rhs(A.dim(), A.field().zero());
    for (const auto& [key, c] : h.coproduct_of(y).terms) {
      Scalar p = form.pair(x.coords(), A.basis_element(key.second).coords());
      if (!p.is_zero()) rhs[key.first] += c * p;
    }
    if (lhs != rhs) {
      r.sposto_ok = false;
      r.failures.push_back("coproduct transport identity fails on a sample");
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cyclic group algebra

CyclicAlgebra build_cyclic(unsigned n, const Field& field) {
  if (n < 1) throw InvalidOrder("cyclic length must be at least 1");
  std::vector<std::string> labels(n);
  for (unsigned i = 0; i < n; ++i)
    labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i));
  std::vector<std::vector<std::vector<Scalar>>> mul(
      n, std::vector<std::vector<Scalar>>(
             n, std::vector<Scalar>(n, field.zero())));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) mul[i][j][(i + j) % n] = field.one();
  std::vector<Scalar> unit(n, field.zero());
  unit[0] = field.one();
  StructureAlgebra alg(field, std::move(labels), std::move(mul),
                       std::move(unit));

  std::vector<TensorElement> cop(n);
  for (unsigned i = 0; i < n; ++i) cop[i].add_term(i, i, field.one());
  std::vector<Scalar> eps(n, field.one());
  Matrix s(field, n, n);
  for (unsigned i = 0; i < n; ++i) s.at((n - i) % n, i) = field.one();
  std::vector<Scalar> lambda(n, field.zero());
  lambda[0] = field.one();
  HopfStructure hopf(alg, std::move(cop), std::move(eps), std::move(s),
                     std::move(lambda), alg.unit(), std::nullopt);
  return CyclicAlgebra{n, std::move(hopf)};
}

std::vector<AlgebraElement> cyclic_idempotents(const CyclicAlgebra& c) {
  const StructureAlgebra& A = c.hopf.algebra();
  const Field& field = A.field();
  Scalar q = field.root_of_unity(c.n);  // NoSuchRoot propagates
  Scalar inv_n = field.from_integer(static_cast<long long>(c.n)).inverse();
  std::vector<AlgebraElement> out;
  for (unsigned t = 0; t < c.n; ++t) {
    std::vector<Scalar> coords(c.n, field.zero());
    for (unsigned i = 0; i < c.n; ++i)
      coords[i] = q.pow(static_cast<long long>(t) * i) * inv_n;
    out.push_back(A.element(std::move(coords)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Taft algebra

TaftAlgebra build_taft(unsigned N, const Field& field, const Scalar& q) {
  if (N < 1) throw InvalidOrder("N must be at least 1");
  if (multiplicative_order(q, N) != N)
    throw NoSuchRoot("q is not a primitive N-th root of unity");

  OmegaSpec spec;
  spec.s_size = N;
  spec.capN = N;
  spec.omega.resize(N);
  for (unsigned s = 0; s < N; ++s) spec.omega[s] = (s + 1) % N;
  OmegaAlgebra omega(spec, field);
  const StructureAlgebra& A = omega.algebra();
  const unsigned dim = spec.dim();

  // g = sum_t q^{-t} e_t, x = sum_s e_s x.
  std::vector<Scalar> gcoords(dim, field.zero());
  for (unsigned t = 0; t < N; ++t)
    gcoords[spec.index_of(t, 0)] = q.pow(-static_cast<long long>(t));
  AlgebraElement g = A.element(gcoords);
  AlgebraElement x = omega.x_power(1);
  Scalar inv_n = field.from_integer(N).inverse();

  // Coproducts by multiplicative extension from Delta(g) = g (x) g and
  // Delta(x) = g (x) x + x (x) 1.
  TensorElement dg = tensor_of(g, g);
  TensorElement dx = tensor_of(g, x);
  dx.accumulate(tensor_of(x, A.unit()), field.one());
  std::vector<TensorElement> dg_pow(N);
  dg_pow[0] = tensor_of(A.unit(), A.unit());
  for (unsigned i = 1; i < N; ++i) dg_pow[i] = tensor_mul(A, dg_pow[i - 1], dg);
  std::vector<TensorElement> dx_pow(N);
  dx_pow[0] = tensor_of(A.unit(), A.unit());
  for (unsigned m = 1; m < N; ++m) dx_pow[m] = tensor_mul(A, dx_pow[m - 1], dx);

  std::vector<TensorElement> cop(dim);
  std::vector<Scalar> eps(dim, field.zero());
  for (unsigned s = 0; s < N; ++s) {
    TensorElement de;
    for (unsigned i = 0; i < N; ++i)
      de.accumulate(dg_pow[i], q.pow(static_cast<long long>(s) * i) * inv_n);
    Scalar eps_e = field.zero();
    for (unsigned i = 0; i < N; ++i)
      eps_e += q.pow(static_cast<long long>(s) * i) * inv_n;
    for (unsigned m = 0; m < N; ++m) {
      cop[spec.index_of(s, m)] = tensor_mul(A, de, dx_pow[m]);
      eps[spec.index_of(s, m)] = m == 0 ? eps_e : field.zero();
    }
  }

  // Antipode: closed form S(e_s x^m) = (-1)^m q^{-m(m+1)/2 - s m}
  // e_{-s-m} x^m, cross-checked below against the anti-multiplicative
  // extension from S(g) = g^{-1}, S(x) = -g^{-1} x.
  Matrix smat(field, dim, dim);
  for (unsigned s = 0; s < N; ++s)
    for (unsigned m = 0; m < N; ++m) {
      long long expo = -(static_cast<long long>(m) * (m + 1)) / 2 -
                       static_cast<long long>(s) * m;
      Scalar c = q.pow(expo);
      if (m % 2 == 1) c = -c;
      unsigned target_s = (2 * N - s - m) % N;
      smat.at(spec.index_of(target_s, m), spec.index_of(s, m)) = c;
    }
  AlgebraElement ginv = g.inverse();
  AlgebraElement sx = -(ginv * x);
  for (unsigned s = 0; s < N; ++s) {
    AlgebraElement se = A.zero();
    for (unsigned i = 0; i < N; ++i)
      se = se + ginv.pow(i) * (q.pow(static_cast<long long>(s) * i) * inv_n);
    for (unsigned m = 0; m < N; ++m) {
      AlgebraElement expected = sx.pow(m) * se;
      if (smat.col(spec.index_of(s, m)) != expected.coords())
        throw Error("Taft antipode closed form disagrees with the extension");
    }
  }

  // lambda(e_s x^m) = (1/N) q^{s+m} delta_{m,N-1}.
  std::vector<Scalar> lambda(dim, field.zero());
  for (unsigned s = 0; s < N; ++s)
    lambda[spec.index_of(s, N - 1)] =
        q.pow(static_cast<long long>(s) + N - 1) * inv_n;

  HopfStructure hopf(A, std::move(cop), std::move(eps), std::move(smat),
                     std::move(lambda), g, q);

  // Closed form of the integral form: mu(s) = 1-s, nu(m) = N-1-m,
  // d_(s,m) = (1/N)(-1)^m q^{-(m+2s)(m+1)/2}.
  CanonicalFormSpec closed;
  closed.mu.resize(N);
  closed.nu.resize(N);
  for (unsigned s = 0; s < N; ++s) closed.mu[s] = (N + 1 - s) % N;
  for (unsigned m = 0; m < N; ++m) closed.nu[m] = N - 1 - m;
  closed.d.assign(dim, field.zero());
  for (unsigned s = 0; s < N; ++s)
    for (unsigned m = 0; m < N; ++m) {
      long long expo =
          -((static_cast<long long>(m) + 2 * s) * (m + 1)) / 2;
      Scalar c = q.pow(expo) * inv_n;
      if (m % 2 == 1) c = -c;
      closed.d[spec.index_of(s, m)] = c;
    }
  if (hopf.integral_form().gram() !=
      canonical_form(omega, closed).gram())
    throw Error("Taft integral form disagrees with its closed form");

  return TaftAlgebra{N,    q,         std::move(omega),
                     std::move(hopf), std::move(closed), std::move(g)};
}

AlgebraElement taft_monomial(const TaftAlgebra& t, unsigned xpow,
                             unsigned gpow) {
  const OmegaSpec& spec = t.omega.spec();
  if (xpow >= t.N) return t.omega.algebra().zero();
  // x^n g^a = sum_t q^{-t a} e_{t-n} x^n
  std::vector<Scalar> coords(spec.dim(), t.omega.field().zero());
  for (unsigned tt = 0; tt < t.N; ++tt)
    coords[spec.index_of((tt + t.N - xpow % t.N) % t.N, xpow)] =
        t.q.pow(-static_cast<long long>(tt) * gpow);
  return t.omega.algebra().element(std::move(coords));
}

Matrix taft_monomial_basis_matrix(const TaftAlgebra& t) {
  const unsigned N = t.N;
  Matrix m(t.omega.field(), N * N, N * N);
  for (unsigned n = 0; n < N; ++n)
    for (unsigned a = 0; a < N; ++a) {
      AlgebraElement e = taft_monomial(t, n, a);
      for (unsigned i = 0; i < N * N; ++i) m.at(i, n * N + a) = e.coord(i);
    }
  return m;
}

// ---------------------------------------------------------------------------
// 24-dimensional bosonization

CdmmAlgebra build_cdmm(const Field& field, const Scalar& zeta) {
  if (multiplicative_order(zeta, 6) != 6)
    throw NoSuchRoot("zeta is not a primitive 6th root of unity");
  std::uint64_t ch = field.characteristic();
  if (ch != 0 && 12 % ch == 0)
    throw BadCharacteristic("characteristic divides 12");

  OmegaSpec spec;
  spec.s_size = 12;
  spec.capN = 2;
  spec.omega.resize(12);
  std::vector<std::string> s_labels(12);
  auto sidx = [](unsigned i, unsigned j) { return i * 6 + j % 6; };
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 6; ++j) {
      spec.omega[sidx(i, j)] = sidx(i, (j + 3) % 6);
      s_labels[sidx(i, j)] =
          "e" + std::to_string(i) + "_" + std::to_string(j);
    }
  OmegaAlgebra omega(spec, field, std::move(s_labels));
  const StructureAlgebra& A = omega.algebra();
  const unsigned dim = spec.dim();

  auto diag_element = [&](auto&& value) {
    std::vector<Scalar> coords(dim, field.zero());
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 6; ++j)
        coords[spec.index_of(sidx(i, j), 0)] = value(i, j);
    return A.element(std::move(coords));
  };
  Scalar one = field.one();
  AlgebraElement a = diag_element([&](unsigned i, unsigned) {
    return i == 0 ? one : -one;
  });
  AlgebraElement b = diag_element([&](unsigned, unsigned j) {
    return zeta.pow(-static_cast<long long>(j));
  });
  AlgebraElement binv = diag_element([&](unsigned, unsigned j) {
    return zeta.pow(static_cast<long long>(j));
  });
  AlgebraElement g = diag_element([&](unsigned, unsigned j) {
    return j % 2 == 0 ? one : -one;
  });
  AlgebraElement e0 = diag_element([&](unsigned i, unsigned) {
    return i == 0 ? one : field.zero();
  });
  AlgebraElement e1 = diag_element([&](unsigned i, unsigned) {
    return i == 1 ? one : field.zero();
  });
  AlgebraElement x = omega.x_power(1);
  Scalar half = field.from_integer(2).inverse();
  Scalar sixth = field.from_integer(6).inverse();

  // Delta(a) = a (x) a, Delta(b) = b (x) e0 b + b^{-1} (x) e1 b,
  // Delta(x) = g (x) x + x (x) 1.
  TensorElement da = tensor_of(a, a);
  TensorElement db = tensor_of(b, e0 * b);
  db.accumulate(tensor_of(binv, e1 * b), one);
  TensorElement dx = tensor_of(g, x);
  dx.accumulate(tensor_of(x, A.unit()), one);

  TensorElement unit_tensor = tensor_of(A.unit(), A.unit());
  std::vector<TensorElement> db_pow(6);
  db_pow[0] = unit_tensor;
  for (unsigned k = 1; k < 6; ++k) db_pow[k] = tensor_mul(A, db_pow[k - 1], db);

  std::vector<TensorElement> cop(dim);
  std::vector<Scalar> eps(dim, field.zero());
  for (unsigned i = 0; i < 2; ++i) {
    TensorElement dei = unit_tensor;
    dei.accumulate(da, i == 0 ? one : -one);
    dei = dei.scaled(half);
    Scalar eps_ei = (one + (i == 0 ? one : -one)) * half;
    for (unsigned j = 0; j < 6; ++j) {
      TensorElement dfj;
      Scalar eps_fj = field.zero();
      for (unsigned k = 0; k < 6; ++k) {
        Scalar c = zeta.pow(static_cast<long long>(j) * k) * sixth;
        dfj.accumulate(db_pow[k], c);
        eps_fj += c;
      }
      TensorElement deij = tensor_mul(A, dei, dfj);
      cop[spec.index_of(sidx(i, j), 0)] = deij;
      cop[spec.index_of(sidx(i, j), 1)] = tensor_mul(A, deij, dx);
      eps[spec.index_of(sidx(i, j), 0)] = eps_ei * eps_fj;
    }
  }

  // Antipode closed form: S(e_{i,j} x^m) = (-1)^{j' m} e_{i, j'-3m} x^m with
  // j' = (-1)^{i+1} j; cross-checked against the extension from
  // S(a) = a, S(b) = e0 b^{-1} + e1 b, S(x) = -g x.
  Matrix smat(field, dim, dim);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 6; ++j)
      for (unsigned m = 0; m < 2; ++m) {
        unsigned jp = i == 0 ? (6 - j) % 6 : j;
        Scalar c = (jp * m) % 2 == 0 ? one : -one;
        unsigned target = sidx(i, (jp + 6 - 3 * m) % 6);
        smat.at(spec.index_of(target, m),
                spec.index_of(sidx(i, j), m)) = c;
      }
  AlgebraElement sb = e0 * binv + e1 * b;
  AlgebraElement sx = -(g * x);
  for (unsigned i = 0; i < 2; ++i) {
    AlgebraElement sei = (A.unit() + a * (i == 0 ? one : -one)) * half;
    for (unsigned j = 0; j < 6; ++j) {
      AlgebraElement sfj = A.zero();
      for (unsigned k = 0; k < 6; ++k)
        sfj = sfj + sb.pow(k) * (zeta.pow(static_cast<long long>(j) * k) * sixth);
      for (unsigned m = 0; m < 2; ++m) {
        AlgebraElement expected = sx.pow(m) * sfj * sei;
        if (smat.col(spec.index_of(sidx(i, j), m)) != expected.coords())
          throw Error("bosonization antipode closed form disagrees "
                      "with the extension");
      }
    }
  }

  // lambda(e_{i,j} x^m) = delta_{m,1} (-1)^{j+1} / 12.
  Scalar twelfth = field.from_integer(12).inverse();
  std::vector<Scalar> lambda(dim, field.zero());
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 6; ++j)
      lambda[spec.index_of(sidx(i, j), 1)] =
          j % 2 == 0 ? -twelfth : twelfth;

  HopfStructure hopf(A, std::move(cop), std::move(eps), std::move(smat),
                     std::move(lambda), g, zeta);

  // Closed form: mu((i,j)) = (i, (-1)^{i+1} j - 3), nu(m) = 1 - m,
  // d_(i,j,m) = (-1)^{j(m+1)} / 12.
  CanonicalFormSpec closed;
  closed.mu.resize(12);
  closed.nu = {1, 0};
  closed.d.assign(dim, field.zero());
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 6; ++j) {
      int jm = i == 0 ? -static_cast<int>(j) - 3 : static_cast<int>(j) - 3;
      closed.mu[sidx(i, j)] = sidx(i, static_cast<unsigned>(((jm % 6) + 6) % 6));
      for (unsigned m = 0; m < 2; ++m)
        closed.d[spec.index_of(sidx(i, j), m)] =
            (j * (m + 1)) % 2 == 0 ? twelfth : -twelfth;
    }
  if (hopf.integral_form().gram() != canonical_form(omega, closed).gram())
    throw Error("bosonization integral form disagrees with its closed form");

  return CdmmAlgebra{zeta, std::move(omega),  std::move(hopf),
                     std::move(closed), std::move(a), std::move(b),
                     std::move(g),      std::move(x)};
}

// ---------------------------------------------------------------------------
// Orthogonality theorems

namespace {

OrthogonalCheck orthogonal_check_impl(const OmegaAlgebra& omega,
                                      const HopfStructure& hopf,
                                      Subspace predicted,
                                      const RightSubmodule& ideal,
                                      const AlgebraElement* unit_a) {
  const BilinearForm& form = hopf.integral_form();
  Subspace target = ideal.space();
  if (unit_a) {
    if (!omega.x_polynomial(*unit_a))
      throw NotInR("scaling unit must lie in the x-subalgebra");
    AlgebraElement ainv = unit_a->inverse();  // NotInvertible propagates
    target = left_multiply(*unit_a, target);
    predicted = left_multiply(hopf.antipode(ainv), predicted);
  }
  OrthogonalCheck out{std::move(predicted), form.orthogonal_left(target),
                      form.orthogonal_right(target), false, false};
  out.left_right_agree = out.computed_left == out.computed_right;
  out.equal = out.left_right_agree && out.predicted == out.computed_right;
  return out;
}

}  // namespace

OrthogonalCheck taft_orthogonal_check(const TaftAlgebra& t, unsigned s,
                                      unsigned m,
                                      const AlgebraElement* unit_a) {
  const unsigned N = t.N;
  if (s >= N || m >= N) throw IndexOutOfRange("Taft ideal index");
  unsigned mu_s = (N + 1 - s) % N;
  Subspace pred = Subspace::zero(t.omega.field(), t.omega.spec().dim());
  for (unsigned tt = 0; tt < N; ++tt) {
    if (tt == mu_s) continue;
    pred = subspace_sum(pred, t.omega.ideal(tt, 0).space());
  }
  if (m > 0) pred = subspace_sum(pred, t.omega.ideal(mu_s, N - m).space());
  return orthogonal_check_impl(t.omega, t.hopf, std::move(pred),
                               t.omega.ideal(s, m), unit_a);
}

OrthogonalCheck cdmm_orthogonal_check(const CdmmAlgebra& c, unsigned s,
                                      unsigned t, unsigned m,
                                      const AlgebraElement* unit_a) {
  if (s >= 2 || t >= 6 || m >= 2) throw IndexOutOfRange("ideal index (s,t,m)");
  int signed_t = s == 0 ? -static_cast<int>(t) : static_cast<int>(t);
  unsigned tstar = static_cast<unsigned>((((signed_t + 3) % 6) + 6) % 6);
  Subspace pred = Subspace::zero(c.omega.field(), c.omega.spec().dim());
  for (unsigned j = 0; j < 6; ++j)
    pred = subspace_sum(pred, c.ideal(1 - s, j, 0).space());
  for (unsigned j = 0; j < 6; ++j) {
    if (j == tstar) continue;
    pred = subspace_sum(pred, c.ideal(s, j, 0).space());
  }
  if (m > 0) pred = subspace_sum(pred, c.ideal(s, tstar, 2 - m).space());
  return orthogonal_check_impl(c.omega, c.hopf, std::move(pred),
                               c.ideal(s, t, m), unit_a);
}

// ---------------------------------------------------------------------------
// Cyclic codes

CyclicCode::CyclicCode(unsigned n, Field f, Poly gen)
    : length(n), field(std::move(f)) {
  gen = poly_trim(std::move(gen));
  int deg = poly_degree(gen);
  if (deg < 0) throw NotADivisor("zero generator polynomial");
  if (static_cast<unsigned>(deg) > n)
    throw NotADivisor("generator degree exceeds the code length");
  if (!gen[deg].is_one()) gen = poly_scale(gen, gen[deg].inverse());
  auto [q, r] = poly_divmod(poly_xn_minus_one(field, n), gen);
  (void)q;
  if (poly_degree(r) >= 0)
    throw NotADivisor("generator does not divide X^n - 1");
  generator = std::move(gen);
}

Subspace code_subspace(const CyclicAlgebra& c, const CyclicCode& code) {
  const StructureAlgebra& A = c.hopf.algebra();
  if (code.length != c.n || code.field != A.field())
    throw AmbientMismatch("code and algebra lengths differ");
  std::vector<std::vector<Scalar>> rows;
  for (unsigned i = 0; i < c.n; ++i) {
    std::vector<Scalar> coords(c.n, A.field().zero());
    for (std::size_t k = 0; k < code.generator.size(); ++k)
      coords[(k + i) % c.n] += code.generator[k];
    rows.push_back(std::move(coords));
  }
  return span_of(A.field(), c.n, rows);
}

CyclicDualResult cyclic_dual(const CyclicAlgebra& c, const CyclicCode& code) {
  const Field& field = c.hopf.field();
  auto [h, rem] =
      poly_divmod(poly_xn_minus_one(field, c.n), code.generator);
  if (poly_degree(rem) >= 0) throw NotADivisor("generator does not divide");
  int d = poly_degree(h);
  // g_perp = h_0^{-1} X^d h(X^{-1}): reversed, normalized parity check.
  Poly rev(static_cast<std::size_t>(d) + 1, field.zero());
  for (int k = 0; k <= d; ++k) rev[static_cast<std::size_t>(k)] = h[d - k];
  Poly g_perp = poly_scale(rev, h[0].inverse());

  Subspace ideal = code_subspace(c, code);
  Subspace orth = c.hopf.integral_form().orthogonal_right(ideal);
  // The form is symmetric here, so left and right orthogonals agree.
  if (orth != c.hopf.integral_form().orthogonal_left(ideal))
    throw Error("cyclic form orthogonals disagree");

  CyclicDualResult out{std::move(h), CyclicCode(c.n, field, g_perp),
                       std::move(orth), false};
  out.agree = code_subspace(c, out.dual) == out.orthogonal;
  return out;
}

}  // namespace hopfcode
