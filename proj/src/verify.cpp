#include "hopfcode/verify.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcode {

namespace {

std::string join_failures(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

// Coordinates of w in the RREF basis of m; throws if w is outside m.
std::vector<Scalar> coords_in_basis(const Subspace& m,
                                    const std::vector<Scalar>& w) {
  std::vector<Scalar> c;
  std::vector<Scalar> r = w;
  const std::size_t n = m.ambient_dim();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::size_t p = 0;
    while (p < n && m.basis().at(i, p).is_zero()) ++p;
    Scalar f = r[p];
    c.push_back(f);
    if (!f.is_zero())
      for (std::size_t j = p; j < n; ++j) r[j] -= f * m.basis().at(i, j);
  }
  for (const auto& x : r)
    if (!x.is_zero()) throw Error("vector lies outside the subspace");
  return c;
}

}  // namespace

AlgebraElement rewrite_basis_product(const OmegaAlgebra& alg, unsigned s1,
                                     unsigned m1, unsigned s2, unsigned m2) {
  const OmegaSpec& spec = alg.spec();
  std::vector<unsigned> inv(spec.s_size);
  for (unsigned s = 0; s < spec.s_size; ++s) inv[spec.omega[s]] = s;

  struct Token {
    bool is_x;
    unsigned s;  // idempotent index when !is_x
  };
  std::vector<Token> word;
  word.push_back({false, s1});
  for (unsigned i = 0; i < m1; ++i) word.push_back({true, 0});
  word.push_back({false, s2});
  for (unsigned i = 0; i < m2; ++i) word.push_back({true, 0});

  // Rewrite to normal form: move idempotents left past x one swap at a
  // time, merge adjacent idempotents, kill on mismatch or x-overflow.
  bool zero = false;
  bool changed = true;
  while (changed && !zero) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i].is_x && !word[i + 1].is_x) {
        unsigned t = word[i + 1].s;
        word[i] = {false, inv[t]};
        word[i + 1] = {true, 0};
        changed = true;
        break;
      }
      if (!word[i].is_x && !word[i + 1].is_x) {
        if (word[i].s != word[i + 1].s) {
          zero = true;
          break;
        }
        word.erase(word.begin() + i);
        changed = true;
        break;
      }
    }
  }
  if (zero) return alg.algebra().zero();
  unsigned head = word.front().s;
  unsigned xcount = static_cast<unsigned>(word.size()) - 1;
  if (xcount >= spec.capN) return alg.algebra().zero();
  return alg.basis(head, xcount);
}

bool right_modules_isomorphic(const RightSubmodule& m,
                              const RightSubmodule& n, std::uint64_t budget) {
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  const StructureAlgebra& alg = m.algebra();
  if (!alg.same(n.algebra()))
    throw AlgebraMismatch("isomorphism search across algebras");
  if (alg.field().kind() != FieldKind::prime)
    throw BudgetExceeded("isomorphism search requires a prime field");
  const std::uint64_t p = alg.field().modulus();
  const unsigned k = static_cast<unsigned>(m.dim());
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k * k; ++i) {
    if (total > budget / p + 1)
      throw BudgetExceeded("p^(k^2) exceeds the isomorphism search budget");
    total *= p;
    if (total > budget)
      throw BudgetExceeded("p^(k^2) exceeds the isomorphism search budget");
  }

  auto representation = [&](const RightSubmodule& mod) {
    std::vector<Matrix> out;
    for (unsigned b = 0; b < alg.dim(); ++b) {
      Matrix r(alg.field(), k, k);
      for (unsigned i = 0; i < k; ++i) {
        AlgebraElement w = alg.element(mod.space().basis_row(i)) *
                           alg.basis_element(b);
        auto c = coords_in_basis(mod.space(), w.coords());
        for (unsigned j = 0; j < k; ++j) r.at(j, i) = c[j];
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  auto rm = representation(m);
  auto rn = representation(n);

  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix pm(alg.field(), k, k);
    std::uint64_t rem = idx;
    for (unsigned e = 0; e < k * k; ++e) {
      pm.at(e / k, e % k) =
          alg.field().from_integer(static_cast<long long>(rem % p));
      rem /= p;
    }
    if (pm.rank() != k) continue;
    bool ok = true;
    for (unsigned b = 0; b < alg.dim() && ok; ++b)
      ok = pm * rm[b] == rn[b] * pm;
    if (ok) return true;
  }
  return false;
}

std::optional<std::pair<AlgebraElement, AlgebraElement>>
find_asymmetric_orthogonality_witness(const BilinearForm& form,
                                      const StructureAlgebra& alg) {
  const auto& cert = form.certificate();
  if (!cert) return std::nullopt;
  const auto& sigma = cert->sigma;
  const auto& d = cert->d;
  const std::size_t n = form.dim();
  // x = v_a + v_b against y = d_b v_{sigma(a)} - d_a v_{sigma(b)} kills
  // <x, y> by construction; <y, x> survives exactly when the Nakayama
  // coefficients at a and b differ.
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) {
      AlgebraElement x = alg.basis_element(a) + alg.basis_element(b);
      AlgebraElement y = alg.basis_element(sigma[a]) * d[b] -
                         alg.basis_element(sigma[b]) * d[a];
      if (form.pair(x, y).is_zero() && !form.pair(y, x).is_zero())
        return std::make_pair(std::move(x), std::move(y));
    }
  return std::nullopt;
}

void suite_subspace_lattice(const BilinearForm& form, DeterministicRng& rng,
                            unsigned samples, VerifyReport& report) {
  const Field& field = form.field();
  const std::size_t n = form.dim();
  NakayamaMap gamma = form.nakayama();
  bool swa = true, duals = true;
  std::string swa_detail;
  for (unsigned k = 0; k < samples && swa && duals; ++k) {
    Subspace u = rng.subspace(field, n);
    Subspace w = rng.subspace(field, n);
    Subspace u0 = subspace_intersect(u, w);  // nested inside u
    Subspace ol_u = form.orthogonal_left(u);
    Subspace ol_w = form.orthogonal_left(w);
    Subspace or_u = form.orthogonal_right(u);
    Subspace or_w = form.orthogonal_right(w);
    bool ok = form.orthogonal_left(u0).contains(ol_u) &&
              form.orthogonal_right(u0).contains(or_u);
    ok = ok && form.orthogonal_left(subspace_sum(u, w)) ==
                   subspace_intersect(ol_u, ol_w);
    ok = ok && form.orthogonal_right(subspace_sum(u, w)) ==
                   subspace_intersect(or_u, or_w);
    ok = ok && form.orthogonal_left(u0) == subspace_sum(ol_u, ol_w);
    ok = ok && form.orthogonal_right(u0) == subspace_sum(or_u, or_w);
    ok = ok && ol_w.dim() == n - w.dim() && or_w.dim() == n - w.dim();
    ok = ok && form.orthogonal_left(or_w) == w &&
         form.orthogonal_right(ol_w) == w;
    if (!ok) {
      swa = false;
      swa_detail = "failed on sample " + std::to_string(k);
    }
    if (or_w != map_subspace(gamma.matrix, ol_w)) duals = false;
  }
  report.add("lem:SwA.1", swa, swa_detail);
  report.add("lem:gamDuals", duals);

  if (form.certificate()) {
    const auto& sigma = form.certificate()->sigma;
    bool orthog = true;
    for (unsigned k = 0; k < samples && orthog; ++k) {
      std::vector<std::vector<Scalar>> rows_b, rows_tau;
      for (unsigned i = 0; i < n; ++i) {
        if (rng.next(2) == 0) continue;
        std::vector<Scalar> e(n, field.zero());
        e[i] = field.one();
        rows_b.push_back(e);
        std::vector<Scalar> et(n, field.zero());
        et[sigma[sigma[i]]] = field.one();
        rows_tau.push_back(et);
      }
      Subspace wb = span_of(field, n, rows_b);
      Subspace wt = span_of(field, n, rows_tau);
      orthog = form.orthogonal_right(wb) == form.orthogonal_left(wt);
    }
    report.add("lem:orthog", orthog);
  }
}

void suite_monomial_certificate(const BilinearForm& form,
                                VerifyReport& report) {
  if (!form.certificate()) {
    report.add("lem:monomial", false, "no monomial certificate detected");
    return;
  }
  const auto& cert = *form.certificate();
  bool ok = true;
  // Gram = D P exactly.
  Matrix rebuilt(form.field(), form.dim(), form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i)
    rebuilt.at(i, cert.sigma[i]) = cert.d[i];
  ok = ok && rebuilt == form.gram();
  // The certificate route and the generic Gram route agree on gamma.
  NakayamaMap gamma = form.nakayama();
  ok = ok && gamma.monomial.has_value();
  ok = ok &&
       gamma.matrix == form.gram_inverse() * form.gram().transpose();
  report.add("lem:monomial", ok);
}

void suite_action_transport(const BilinearForm& form,
                            const StructureAlgebra& alg,
                            DeterministicRng& rng, unsigned samples,
                            VerifyReport& report) {
  const Field& field = form.field();
  const std::size_t n = form.dim();
  Subspace full = Subspace::full(field, n);
  bool ok = true;
  std::string detail;
  for (unsigned k = 0; k < samples && ok; ++k) {
    AlgebraElement a = rng.invertible_element(alg);
    AlgebraElement b = a.inverse();
    Subspace w = rng.subspace(field, n);
    Subspace ol_w = form.orthogonal_left(w);
    Subspace or_w = form.orthogonal_right(w);
    Subspace bw = left_multiply(b, w);
    Subspace wa = right_multiply(w, a);
    Matrix tl_a = action_matrix_tl(form, a);
    Matrix bl_a = action_matrix_bl(form, a);
    Matrix tr_b = action_matrix_tr(form, b);
    Matrix br_b = action_matrix_br(form, b);
    ok = ok && form.orthogonal_left(bw) == map_subspace(tl_a, ol_w);
    ok = ok && form.orthogonal_right(map_subspace(tl_a, w)) ==
                   left_multiply(b, or_w);
    ok = ok && form.orthogonal_left(map_subspace(bl_a, w)) ==
                   left_multiply(b, ol_w);
    ok = ok && form.orthogonal_right(bw) == map_subspace(bl_a, or_w);
    ok = ok && form.orthogonal_left(wa) == map_subspace(tr_b, ol_w);
    ok = ok && form.orthogonal_right(map_subspace(tr_b, w)) ==
                   right_multiply(or_w, a);
    ok = ok && form.orthogonal_left(map_subspace(br_b, w)) ==
                   right_multiply(ol_w, a);
    ok = ok && form.orthogonal_right(wa) == map_subspace(br_b, or_w);
    // Annihilator identities with an arbitrary (not necessarily
    // invertible) c.
    AlgebraElement c = rng.element(alg);
    ok = ok && form.orthogonal_right(map_subspace(
                   action_matrix_tl(form, c), full)) ==
                   kernel(alg.left_mult_matrix(c));
    ok = ok && form.orthogonal_right(map_subspace(
                   action_matrix_tr(form, c), full)) ==
                   kernel(alg.right_mult_matrix(c));
    if (!ok) detail = "failed on sample " + std::to_string(k);
  }
  report.add("prop:action", ok, detail);
}

void suite_hopf_form_lemmas(const HopfStructure& hopf, DeterministicRng& rng,
                            unsigned samples, VerifyReport& report) {
  const StructureAlgebra& alg = hopf.algebra();
  const BilinearForm& form = hopf.integral_form();
  const std::size_t n = hopf.dim();

  bool balanced = true;
  for (unsigned k = 0; k < samples && balanced; ++k) {
    AlgebraElement x = rng.element(alg);
    AlgebraElement y = rng.element(alg);
    AlgebraElement h = rng.element(alg);
    balanced = form.pair(x * h, y) == form.pair(x, y * hopf.antipode(h));
  }
  report.add("eq:Balanced", balanced);

  bool sposto = true;
  for (unsigned k = 0; k < samples && sposto; ++k) {
    AlgebraElement x = rng.element(alg);
    AlgebraElement y = rng.element(alg);
    std::vector<Scalar> lhs(n, alg.field().zero());
    for (const auto& [key, c] : hopf.coproduct_of(x).terms) {
      Scalar p = form.pair(alg.basis_element(key.first), y);
      if (!p.is_zero()) lhs[key.second] += c * p;
    }
    std::vector<Scalar> rhs(n, alg.field().zero());
    for (const auto& [key, c] : hopf.coproduct_of(y).terms) {
      Scalar p = form.pair(x, alg.basis_element(key.second));
      if (!p.is_zero()) rhs[key.first] += c * p;
    }
    sposto = lhs == rhs;
  }
  report.add("eq:Sposto", sposto);

  // Regular-action descriptions through the antipode and the Frobenius
  // Nakayama automorphism, exhaustively on basis pairs.
  Matrix eta = hopf.nakayama_eta();
  Matrix eta_inv = eta.inverse();
  bool leftriang = true;
  for (unsigned i = 0; i < n && leftriang; ++i) {
    AlgebraElement h = alg.basis_element(i);
    Matrix m_tr = action_matrix_tr(form, h);
    Matrix m_br = action_matrix_br(form, h);
    Matrix m_tl = action_matrix_tl(form, h);
    Matrix m_bl = action_matrix_bl(form, h);
    AlgebraElement sinv_h = hopf.antipode_inverse(h);
    AlgebraElement s_h = hopf.antipode(h);
    AlgebraElement sinv_eta_h =
        hopf.antipode_inverse(alg.element(eta.apply(h.coords())));
    AlgebraElement etainv_s_h = alg.element(eta_inv.apply(s_h.coords()));
    for (unsigned j = 0; j < n && leftriang; ++j) {
      AlgebraElement x = alg.basis_element(j);
      leftriang = alg.element(m_tr.apply(x.coords())) == x * sinv_h &&
                  alg.element(m_br.apply(x.coords())) == x * s_h &&
                  alg.element(m_tl.apply(x.coords())) == sinv_eta_h * x &&
                  alg.element(m_bl.apply(x.coords())) == etainv_s_h * x;
    }
    if (!leftriang) break;
    // Annihilator descriptions for this h. The generating sets are the
    // action images: H bl-acted by h is eta^{-1}(S(h)) H, while h br-acting
    // on H sweeps out H S(h).
    Subspace full = Subspace::full(alg.field(), n);
    leftriang =
        kernel(alg.left_mult_matrix(h)) ==
            form.orthogonal_left(left_multiply(etainv_s_h, full)) &&
        kernel(alg.right_mult_matrix(h)) ==
            form.orthogonal_left(right_multiply(full, s_h));
  }
  report.add("lem:leftriang", leftriang);

  // gamma = gamma(1) S^2 and lambda S = lambda gamma.
  NakayamaMap gamma = form.nakayama();
  AlgebraElement gamma1 = alg.element(gamma.matrix.apply(alg.unit_coords()));
  Matrix s2 = hopf.antipode_matrix() * hopf.antipode_matrix();
  bool invol = gamma.matrix == alg.left_mult_matrix(gamma1) * s2;
  for (unsigned i = 0; i < n && invol; ++i) {
    AlgebraElement v = alg.basis_element(i);
    invol = hopf.integral(hopf.antipode(v)) ==
            hopf.integral(alg.element(gamma.matrix.col(i)));
  }
  report.add("lem:Involutory", invol);
}

void suite_annihilator_inclusion(const HopfStructure& hopf,
                                 const std::vector<RightSubmodule>& ideals,
                                 VerifyReport& report) {
  const StructureAlgebra& alg = hopf.algebra();
  const BilinearForm& form = hopf.integral_form();
  bool inclusion = true, equality = true, right_ideals = true;
  unsigned equalities_checked = 0;
  for (const auto& ideal : ideals) {
    Subspace ann = right_annihilator(alg, ideal.space());
    Subspace sinv_ann =
        map_subspace(hopf.antipode_inverse_matrix(), ann);
    Subspace perp_l = form.orthogonal_left(ideal.space());
    Subspace perp_r = form.orthogonal_right(ideal.space());
    inclusion = inclusion && perp_l.contains(sinv_ann);
    right_ideals = right_ideals && is_right_submodule(alg, perp_l) &&
                   is_right_submodule(alg, perp_r);
    bool two_sided = true;
    for (unsigned b = 0; b < alg.dim() && two_sided; ++b)
      two_sided = perp_l.contains(
          left_multiply(alg.basis_element(b), perp_l));
    if (two_sided) {
      ++equalities_checked;
      equality = equality && sinv_ann == perp_l;
    }
  }
  report.add("lem:AnnI", inclusion && equality,
             "equality additionally checked on " +
                 std::to_string(equalities_checked) + " two-sided cases");
  report.add("lem:orth-right-ideal", right_ideals);
}

VerifyEntry verify_classification(const OmegaAlgebra& alg,
                                  std::uint64_t budget) {
  VerifyEntry entry{"thm:indecomposableGold", false, ""};
  Classification cls = [&] {
    if (alg.field().kind() == FieldKind::prime)
      return classify_indecomposables(alg, budget);
    // Exhaustive r needs a finite field; use a small default sample.
    std::vector<AlgebraElement> sample{alg.algebra().zero()};
    for (unsigned k = 0; k < alg.spec().capN; ++k)
      sample.push_back(alg.x_power(k));
    return classify_indecomposables(alg, budget, &sample);
  }();
  // Family-side checks that never need the enumeration: dimensions and
  // closure (closure is already enforced by RightSubmodule construction).
  const unsigned capN = alg.spec().capN;
  bool family_ok =
      cls.representative_count() == alg.spec().s_size * capN;
  for (const auto& c : cls.family)
    family_ok = family_ok && c.module.dim() == capN - c.t;

  std::vector<Subspace> family;
  for (const auto& c : cls.family) family.push_back(c.module.space());
  std::sort(family.begin(), family.end(), Subspace::canonical_less);

  try {
    auto all = enumerate_right_submodules(alg.algebra(), {budget, true});
    std::vector<Subspace> indec;
    for (const auto& m : all)
      if (is_indecomposable(m, all)) indec.push_back(m.space());
    std::sort(indec.begin(), indec.end(), Subspace::canonical_less);
    entry.pass = family_ok && indec == family;
    entry.detail = "enumerated " + std::to_string(all.size()) +
                   " submodules, " + std::to_string(indec.size()) +
                   " indecomposable; scaled-ideal family has " +
                   std::to_string(family.size()) + " members";
  } catch (const BudgetExceeded&) {
    entry.pass = family_ok;
    entry.detail =
        std::string("enumeration skipped (") +
        (alg.field().kind() == FieldKind::prime ? "p^dim exceeds budget"
                                                : "non-prime field") +
        "); family of " + std::to_string(family.size()) +
        " members checked for closure and dimensions only" +
        (cls.sampled ? " (sampled r)" : "");
  }
  return entry;
}

VerifyEntry verify_representative_irredundancy(const OmegaAlgebra& alg,
                                               std::uint64_t budget) {
  VerifyEntry entry{"thm:indecomposableGold-irredundancy", true, ""};
  const OmegaSpec& spec = alg.spec();
  std::vector<RightSubmodule> reps;
  std::vector<std::pair<std::size_t, std::size_t>> signature;
  for (unsigned s = 0; s < spec.s_size; ++s)
    for (unsigned t = 0; t < spec.capN; ++t) {
      RightSubmodule m = alg.ideal(s, t);
      signature.emplace_back(
          m.dim(), right_annihilator(alg.algebra(), m.space()).dim());
      reps.push_back(std::move(m));
    }
  unsigned searched = 0, skipped = 0;
  for (std::size_t i = 0; i < reps.size() && entry.pass; ++i)
    for (std::size_t j = i + 1; j < reps.size() && entry.pass; ++j) {
      if (signature[i] != signature[j]) continue;
      try {
        ++searched;
        if (right_modules_isomorphic(reps[i], reps[j],
                                     std::min<std::uint64_t>(budget, 1u << 20)))
          entry.pass = false;
      } catch (const BudgetExceeded&) {
        ++skipped;
      }
    }
  std::ostringstream os;
  os << searched << " tied signature pairs searched exhaustively";
  if (skipped) os << ", " << skipped << " skipped (budget)";
  entry.detail = os.str();
  return entry;
}

VerifyEntry verify_orthogonal_closed_form(const OmegaAlgebra& alg,
                                          const CanonicalFormSpec& form_spec) {
  VerifyEntry entry{"thm:orthog-indec", true, ""};
  BilinearForm form = canonical_form(alg, form_spec);
  const OmegaSpec& spec = alg.spec();
  unsigned checked = 0;
  for (unsigned s = 0; s < spec.s_size && entry.pass; ++s)
    for (unsigned m = 0; m < spec.capN && entry.pass; ++m) {
      PredictedOrthogonal pred =
          predicted_orthogonal_ideal(alg, form_spec, s, m);
      Subspace computed_r = form.orthogonal_right(alg.ideal(s, m).space());
      Subspace left_route = form.orthogonal_left(
          alg.ideal(pred.left_s, pred.left_m).space());
      // The summands really are independent.
      std::vector<Subspace> parts;
      for (unsigned t = 0; t < spec.s_size; ++t)
        if (t != form_spec.mu[s]) parts.push_back(alg.ideal(t, 0).space());
      if (m > 0)
        parts.push_back(alg.ideal(form_spec.mu[s], spec.capN - m).space());
      entry.pass = pred.right_orthogonal == computed_r &&
                   computed_r == left_route && is_direct_sum(parts) &&
                   computed_r.dim() == spec.dim() - (spec.capN - m);
      ++checked;
    }
  entry.detail = std::to_string(checked) + " ideals checked";
  return entry;
}

CanonicalFormSpec random_canonical_form(DeterministicRng& rng,
                                        const OmegaSpec& spec) {
  CanonicalFormSpec out;
  out.mu.resize(spec.s_size);
  for (unsigned i = 0; i < spec.s_size; ++i) out.mu[i] = i;
  for (unsigned i = spec.s_size; i > 1; --i)
    std::swap(out.mu[i - 1], out.mu[rng.next(i)]);
  out.nu.resize(spec.capN);
  for (unsigned m = 0; m < spec.capN; ++m) out.nu[m] = spec.capN - 1 - m;
  // d is field-dependent; filled by the caller via fill_random_d.
  return out;
}

AlgebraElement random_invertible_r(DeterministicRng& rng,
                                   const OmegaAlgebra& alg) {
  std::vector<Scalar> coeffs;
  coeffs.push_back(alg.field().one());  // normalized a(0) = 1
  for (unsigned k = 1; k < alg.spec().capN; ++k)
    coeffs.push_back(rng.scalar(alg.field()));
  return alg.from_x_polynomial(coeffs);
}

namespace {

CanonicalFormSpec random_canonical_form_over(DeterministicRng& rng,
                                             const OmegaSpec& spec,
                                             const Field& field) {
  CanonicalFormSpec out = random_canonical_form(rng, spec);
  out.d.clear();
  for (unsigned i = 0; i < spec.dim(); ++i)
    out.d.push_back(rng.nonzero_scalar(field));
  return out;
}

void omega_relations_entry(const OmegaAlgebra& alg, DeterministicRng& rng,
                           unsigned samples, VerifyReport& report) {
  const OmegaSpec& spec = alg.spec();
  const StructureAlgebra& A = alg.algebra();
  bool ok = true;
  // Defining relations.
  for (unsigned s = 0; s < spec.s_size && ok; ++s)
    for (unsigned t = 0; t < spec.s_size && ok; ++t) {
      AlgebraElement prod = alg.idempotent(s) * alg.idempotent(t);
      ok = prod == (s == t ? alg.idempotent(t) : A.zero());
    }
  AlgebraElement unit_sum = A.zero();
  for (unsigned s = 0; s < spec.s_size; ++s)
    unit_sum = unit_sum + alg.idempotent(s);
  ok = ok && unit_sum == A.unit();
  ok = ok && alg.x_power(1).pow(spec.capN).is_zero();
  for (unsigned s = 0; s < spec.s_size && ok; ++s)
    ok = alg.idempotent(s) * alg.x_power(1) ==
         alg.x_power(1) * alg.idempotent(spec.omega[s]);
  // Product rule against the rewriting oracle.
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(spec.dim()) * spec.dim();
  for (unsigned k = 0; k < samples && ok; ++k) {
    unsigned i = static_cast<unsigned>(rng.next(spec.dim()));
    unsigned j = static_cast<unsigned>(rng.next(spec.dim()));
    auto [s1, m1] = spec.split(i);
    auto [s2, m2] = spec.split(j);
    ok = alg.basis(s1, m1) * alg.basis(s2, m2) ==
         rewrite_basis_product(alg, s1, m1, s2, m2);
  }
  (void)pairs;
  report.add("eq:relA", ok);
}

}  // namespace

VerifyReport verify_omega_suite(const OmegaAlgebra& alg,
                                const VerifyOptions& opts) {
  VerifyReport r;
  DeterministicRng rng(opts.seed);
  const OmegaSpec& spec = alg.spec();
  const Field& field = alg.field();

  omega_relations_entry(alg, rng, opts.samples, r);
  r.add(verify_classification(alg, opts.budget));
  r.add(verify_representative_irredundancy(alg, opts.budget));

  bool orth_ok = true;
  std::string orth_detail;
  for (unsigned k = 0; k < 3; ++k) {
    CanonicalFormSpec fs = random_canonical_form_over(rng, spec, field);
    VerifyEntry e = verify_orthogonal_closed_form(alg, fs);
    orth_ok = orth_ok && e.pass;
    orth_detail = e.detail + " per instance, 3 random instances";
  }
  r.add("thm:orthog-indec", orth_ok, orth_detail);

  CanonicalFormSpec fs = random_canonical_form_over(rng, spec, field);
  BilinearForm form = canonical_form(alg, fs);
  bool oleft = true, oright = true;
  for (unsigned k = 0; k < 5; ++k) {
    AlgebraElement rr = alg.from_x_polynomial(
        rng.vector(field, spec.capN > 1 ? spec.capN - 1 : 1));
    AlgebraElement u = alg.algebra().unit() + rr * alg.x_power(1);
    AlgebraElement uinv = u.inverse();
    for (unsigned s = 0; s < spec.s_size; ++s)
      for (unsigned t = 0; t < spec.capN; ++t) {
        Subspace nst = alg.ideal(s, t).space();
        oleft = oleft &&
                form.orthogonal_left(left_multiply(u, nst)) ==
                    map_subspace(action_matrix_tl(form, uinv),
                                 form.orthogonal_left(nst));
        oright = oright &&
                 form.orthogonal_right(left_multiply(u, nst)) ==
                     map_subspace(action_matrix_bl(form, uinv),
                                  form.orthogonal_right(nst));
      }
  }
  r.add("eq:orthNleft", oleft);
  r.add("eq:orthNright", oright);

  suite_monomial_certificate(form, r);
  suite_subspace_lattice(form, rng, opts.samples, r);
  suite_action_transport(form, alg.algebra(), rng,
                         std::min(opts.samples, 25u), r);
  return r;
}

namespace {

void phi_entry(const HopfStructure& hopf, VerifyReport& r) {
  bool ok = hopf.phi(hopf.right_integral()) == hopf.counit_values();
  ok = ok && hopf.integral(hopf.right_integral()).is_one();
  ok = ok && hopf.phi_inverse(hopf.counit_values()) == hopf.right_integral();
  r.add("rem:phimenuno", ok);
}

void axioms_entry(const HopfStructure& hopf, std::uint64_t seed,
                  VerifyReport& r) {
  HopfAxiomReport ax = verify_hopf_axioms(hopf, 16, seed);
  r.add("hopf:axioms", ax.all(), join_failures(ax.failures));
}

// <-| = <<-| as actions iff the transport matrices agree on every basis c.
bool actions_coincide(const BilinearForm& form, const StructureAlgebra& alg) {
  for (unsigned c = 0; c < alg.dim(); ++c) {
    AlgebraElement e = alg.basis_element(c);
    if (!(action_matrix_tl(form, e) == action_matrix_bl(form, e)))
      return false;
  }
  return true;
}

}  // namespace

VerifyReport verify_taft_suite(const TaftAlgebra& taft,
                               const VerifyOptions& opts) {
  VerifyReport r;
  DeterministicRng rng(opts.seed);
  const StructureAlgebra& A = taft.omega.algebra();
  const HopfStructure& H = taft.hopf;
  const BilinearForm& form = H.integral_form();
  const Field& field = A.field();
  const unsigned N = taft.N;
  const Scalar& q = taft.q;
  AlgebraElement x = taft.omega.x_power(1);
  AlgebraElement ginv = taft.g.inverse();
  Scalar inv_n = field.from_integer(N).inverse();

  axioms_entry(H, opts.seed, r);
  phi_entry(H, r);

  // Commutation and antipode identities of the presentation.
  bool fu = true;
  for (unsigned t = 0; t < N && fu; ++t)
    for (unsigned m = 0; m < N && fu; ++m)
      fu = taft.omega.idempotent(t) * x.pow(m) ==
           x.pow(m) * taft.omega.idempotent((t + m) % N);
  for (unsigned t = 0; t < N && fu; ++t)
    for (unsigned a = 0; a < N && fu; ++a) {
      AlgebraElement ga = taft.g.pow(a);
      AlgebraElement expected =
          taft.omega.idempotent(t) * q.pow(-static_cast<long long>(t) * a);
      fu = ga * taft.omega.idempotent(t) == expected &&
           taft.omega.idempotent(t) * ga == expected;
    }
  for (unsigned t = 0; t < N && fu; ++t)
    fu = H.antipode(taft.omega.idempotent(t)) ==
         taft.omega.idempotent((N - t) % N);
  for (unsigned m = 0; m < N && fu; ++m) {
    long long expo = -(static_cast<long long>(m) * (m + 1)) / 2;
    Scalar c = q.pow(expo);
    if (m % 2 == 1) c = -c;
    fu = H.antipode(x.pow(m)) == x.pow(m) * ginv.pow(m) * c &&
         H.antipode(H.antipode(x.pow(m))) ==
             x.pow(m) * q.pow(-static_cast<long long>(m));
  }
  // Basis conversions both ways.
  Matrix conv = taft_monomial_basis_matrix(taft);
  fu = fu && conv.rank() == N * N;
  for (unsigned t = 0; t < N && fu; ++t) {
    AlgebraElement acc = A.zero();
    for (unsigned i = 0; i < N; ++i)
      acc = acc + taft.g.pow(i) * (q.pow(static_cast<long long>(t) * i) * inv_n);
    fu = acc == taft.omega.idempotent(t);
  }
  r.add("lem:formuTaft", fu);

  bool lam = true;
  for (unsigned m = 0; m < N && lam; ++m)
    for (unsigned s = 0; s < N && lam; ++s) {
      Scalar expected = m == N - 1
                            ? q.pow(static_cast<long long>(s)) * inv_n
                            : field.zero();
      lam = H.integral(x.pow(m) * taft.omega.idempotent(s)) == expected;
    }
  r.add("eq:lambdaT", lam);

  // Integral form against both closed expressions.
  bool s1 = form.gram() == canonical_form(taft.omega, taft.closed_form).gram();
  for (unsigned v = 0; v < N && s1; ++v)
    for (unsigned b = 0; b < N && s1; ++b)
      for (unsigned u = 0; u < N && s1; ++u)
        for (unsigned a = 0; a < N && s1; ++a) {
          Scalar expected = field.zero();
          if ((a + b) % N == 0 && u + v == N - 1) {
            long long expo =
                ((static_cast<long long>(v) - 2 * b) * (v + 1)) / 2;
            expected = q.pow(expo) * inv_n;
            if (v % 2 == 1) expected = -expected;
          }
          s1 = form.pair(x.pow(v) * taft.omega.idempotent(b),
                         x.pow(u) * taft.omega.idempotent(a)) == expected;
        }
  r.add("lem:scalar-1", s1);

  // gamma is the monomial transformation and right multiplication by g.
  NakayamaMap gamma = form.nakayama();
  bool sc = gamma.monomial.has_value() &&
            gamma.matrix == A.right_mult_matrix(taft.g);
  r.add("lem:scalarcan", sc);

  // Left and right twisted actions coincide; on R they are S-twisted left
  // multiplication, and eta restricts to S^2.
  bool ls = actions_coincide(form, A);
  for (unsigned k = 0; k < N && ls; ++k) {
    AlgebraElement rk = taft.omega.x_power(k);
    ls = action_matrix_tl(form, rk) ==
         A.left_mult_matrix(H.antipode(rk));
  }
  Matrix eta = H.nakayama_eta();
  for (unsigned k = 0; k < N && ls; ++k) {
    AlgebraElement rk = taft.omega.x_power(k);
    ls = A.element(eta.apply(rk.coords())) == H.antipode(H.antipode(rk));
  }
  r.add("lem:lambdaS", ls);

  {
    VerifyEntry e = verify_classification(taft.omega, opts.budget);
    e.key = "thm:indecomposable";
    r.add(std::move(e));
  }
  r.add(verify_representative_irredundancy(taft.omega, opts.budget));

  bool orth = true;
  for (unsigned s = 0; s < N && orth; ++s)
    for (unsigned m = 0; m < N && orth; ++m) {
      OrthogonalCheck chk = taft_orthogonal_check(taft, s, m);
      orth = chk.equal && chk.left_right_agree;
    }
  for (unsigned k = 0; k < 5 && orth; ++k) {
    AlgebraElement a = random_invertible_r(rng, taft.omega);
    for (unsigned s = 0; s < N && orth; ++s)
      for (unsigned m = 0; m < N && orth; ++m) {
        OrthogonalCheck chk = taft_orthogonal_check(taft, s, m, &a);
        orth = chk.equal && chk.left_right_agree;
      }
  }
  r.add("thm:orthogonal", orth,
        "all (s,m) pairs, unscaled and with 5 sampled units");

  suite_monomial_certificate(form, r);
  suite_subspace_lattice(form, rng, opts.samples, r);
  suite_action_transport(form, A, rng, opts.samples, r);
  suite_hopf_form_lemmas(H, rng, opts.samples, r);
  std::vector<RightSubmodule> ideals;
  for (unsigned s = 0; s < N; ++s)
    for (unsigned t = 0; t < N; ++t) ideals.push_back(taft.omega.ideal(s, t));
  suite_annihilator_inclusion(H, ideals, r);

  auto witness = find_asymmetric_orthogonality_witness(form, A);
  r.add("taft:asymmetric-orthogonality", witness.has_value(),
        witness ? "witness: x = " + witness->first.to_string() + ", y = " +
                      witness->second.to_string() + " with <x,y> = 0 and " +
                      "<y,x> = " +
                      form.pair(witness->second, witness->first).to_string()
                : "no witness among two-term basis combinations");
  return r;
}

VerifyReport verify_cdmm_suite(const CdmmAlgebra& cdmm,
                               const VerifyOptions& opts) {
  VerifyReport r;
  DeterministicRng rng(opts.seed);
  const StructureAlgebra& A = cdmm.omega.algebra();
  const HopfStructure& H = cdmm.hopf;
  const BilinearForm& form = H.integral_form();
  const Field& field = A.field();
  Scalar one = field.one();
  Scalar twelfth = field.from_integer(12).inverse();
  const AlgebraElement& x = cdmm.x;

  axioms_entry(H, opts.seed, r);
  phi_entry(H, r);

  bool fc = true;
  for (unsigned i = 0; i < 2 && fc; ++i)
    for (unsigned j = 0; j < 6 && fc; ++j) {
      AlgebraElement e = cdmm.basis(i, j, 0);
      for (unsigned m = 0; m < 2 && fc; ++m)
        fc = e * x.pow(m) == x.pow(m) * cdmm.basis(i, (j + 3 * m) % 6, 0);
      for (unsigned m = 0; m < 6 && fc; ++m) {
        Scalar sg = (j * m) % 2 == 0 ? one : -one;
        Scalar sa = (i * m) % 2 == 0 ? one : -one;
        Scalar sb = cdmm.zeta.pow(-static_cast<long long>(j) * m);
        fc = cdmm.g.pow(m) * e == e * sg && e * cdmm.g.pow(m) == e * sg &&
             cdmm.a.pow(m) * e == e * sa && e * cdmm.a.pow(m) == e * sa &&
             cdmm.b.pow(m) * e == e * sb && e * cdmm.b.pow(m) == e * sb;
      }
      unsigned jp = i == 0 ? (6 - j) % 6 : j;
      fc = fc && H.antipode(e) == cdmm.basis(i, jp, 0);
    }
  for (unsigned m = 0; m < 2 && fc; ++m) {
    fc = H.antipode(x.pow(m)) == x.pow(m) * cdmm.g.pow(m);
    Scalar sg = m % 2 == 0 ? one : -one;
    fc = fc && H.antipode(H.antipode(x.pow(m))) == x.pow(m) * sg;
  }
  r.add("lem:formCDMM", fc);

  bool lam = true;
  for (unsigned m = 0; m < 2 && lam; ++m) {
    for (unsigned i = 0; i < 2 && lam; ++i)
      for (unsigned j = 0; j < 6 && lam; ++j) {
        Scalar expected = (m == 1 && i == 0 && j == 3) ? one : field.zero();
        lam = H.integral(x.pow(m) * cdmm.a.pow(i) * cdmm.b.pow(j)) == expected;
        Scalar expected_e = m == 1
                                ? (j % 2 == 0 ? twelfth : -twelfth)
                                : field.zero();
        lam = lam &&
              H.integral(x.pow(m) * cdmm.basis(i, j, 0)) == expected_e;
      }
  }
  r.add("cdmm:integral-lemma", lam);

  bool s2 = form.gram() == canonical_form(cdmm.omega, cdmm.closed_form).gram();
  for (unsigned m = 0; m < 2 && s2; ++m)
    for (unsigned i = 0; i < 2 && s2; ++i)
      for (unsigned j = 0; j < 6 && s2; ++j)
        for (unsigned n2 = 0; n2 < 2 && s2; ++n2)
          for (unsigned u = 0; u < 2 && s2; ++u)
            for (unsigned v = 0; v < 6 && s2; ++v) {
              unsigned jp = i == 0 ? (6 - j) % 6 : j;
              Scalar expected = field.zero();
              if (u == i && v == jp && m + n2 == 1)
                expected = (j * (m + 1)) % 2 == 0 ? twelfth : -twelfth;
              s2 = form.pair(x.pow(m) * cdmm.basis(i, j, 0),
                             x.pow(n2) * cdmm.basis(u, v, 0)) == expected;
            }
  r.add("lem:scalar-2", s2);

  NakayamaMap gamma = form.nakayama();
  bool sc = gamma.monomial.has_value() &&
            gamma.matrix == A.right_mult_matrix(cdmm.g);
  r.add("lem:scalarcan", sc);

  bool ls = actions_coincide(form, A);
  for (unsigned k = 0; k < 2 && ls; ++k) {
    AlgebraElement rk = cdmm.omega.x_power(k);
    ls = action_matrix_tl(form, rk) == A.left_mult_matrix(H.antipode(rk));
  }
  r.add("lem:lambdaS-other", ls);

  {
    // Enumeration over GF(p)^24 is far past any budget, so the
    // classification is checked family-side, under the L_in reading (the
    // report detail records that choice).
    VerifyEntry e = verify_classification(cdmm.omega, opts.budget);
    e.key = "thm:indecomposableCDMM";
    Classification cls = classify_indecomposables(cdmm.omega, opts.budget);
    bool closed = true;
    for (const auto& c : cls.family)
      closed = closed && is_right_submodule(A, c.module.space());
    e.pass = e.pass && closed && cls.representative_count() == 24;
    e.detail += "; representative count " +
                std::to_string(cls.representative_count()) +
                "; family members re-checked right-closed; verifies the "
                "indecomposable (L_in) reading of the statement";
    r.add(std::move(e));
  }

  bool orth = true;
  for (unsigned s = 0; s < 2 && orth; ++s)
    for (unsigned t = 0; t < 6 && orth; ++t)
      for (unsigned m = 0; m < 2 && orth; ++m) {
        OrthogonalCheck chk = cdmm_orthogonal_check(cdmm, s, t, m);
        orth = chk.equal && chk.left_right_agree;
      }
  for (unsigned k = 0; k < 3 && orth; ++k) {
    AlgebraElement a = random_invertible_r(rng, cdmm.omega);
    for (unsigned s = 0; s < 2 && orth; ++s)
      for (unsigned t = 0; t < 6 && orth; ++t)
        for (unsigned m = 0; m < 2 && orth; ++m) {
          OrthogonalCheck chk = cdmm_orthogonal_check(cdmm, s, t, m, &a);
          orth = chk.equal && chk.left_right_agree;
        }
  }
  r.add("thm:orthogonal-CDMM", orth,
        "all 24 ideals, unscaled and with 3 sampled units");

  suite_monomial_certificate(form, r);
  suite_subspace_lattice(form, rng, opts.samples, r);
  suite_action_transport(form, A, rng, opts.samples, r);
  suite_hopf_form_lemmas(H, rng, opts.samples, r);
  std::vector<RightSubmodule> ideals;
  for (unsigned s = 0; s < 2; ++s)
    for (unsigned t = 0; t < 6; ++t)
      for (unsigned m = 0; m < 2; ++m)
        ideals.push_back(cdmm.ideal(s, t, m));
  suite_annihilator_inclusion(H, ideals, r);
  return r;
}

VerifyReport verify_cyclic_suite(const CyclicAlgebra& cyclic,
                                 const VerifyOptions& opts) {
  VerifyReport r;
  DeterministicRng rng(opts.seed);
  const StructureAlgebra& A = cyclic.hopf.algebra();
  const HopfStructure& H = cyclic.hopf;
  const BilinearForm& form = H.integral_form();
  const Field& field = A.field();
  const unsigned n = cyclic.n;

  axioms_entry(H, opts.seed, r);
  phi_entry(H, r);

  // Orthonormal monomial basis; symmetric form forces an involutory
  // antipode and trivial Nakayama data.
  r.add("eq:scalar", form.gram() == Matrix::identity(field, n));
  bool invol = form.gram() == form.gram().transpose() &&
               H.antipode_matrix() * H.antipode_matrix() ==
                   Matrix::identity(field, n);
  r.add("cor:involutory", invol);
  bool nak = form.nakayama().matrix == Matrix::identity(field, n) &&
             H.nakayama_eta() == Matrix::identity(field, n);
  r.add("cyclic:nakayama-trivial", nak);

  // The right action transported through phi is the cyclic coordinate
  // shift, on every basis functional.
  bool shift_ok = true;
  AlgebraElement xgen = A.basis_element(n > 1 ? 1 : 0);
  for (unsigned i = 0; i < n && shift_ok; ++i) {
    std::vector<Scalar> f(n, field.zero());
    f[i] = field.one();
    AlgebraElement h = H.phi_inverse(f);
    std::vector<Scalar> shifted = H.phi(h * xgen);
    std::vector<Scalar> expected(n, field.zero());
    expected[(i + 1) % n] = field.one();
    shift_ok = shifted == expected;
  }
  r.add("eq:actioncyclic", shift_ok);

  // Idempotent picture (needs a primitive n-th root in the field).
  try {
    auto idem = cyclic_idempotents(cyclic);
    Scalar inv_n = field.from_integer(n).inverse();
    bool idem_form = true;
    for (unsigned s = 0; s < n && idem_form; ++s)
      for (unsigned t = 0; t < n && idem_form; ++t) {
        Scalar expected =
            (s + t) % n == 0 ? inv_n : field.zero();
        idem_form = form.pair(idem[s], idem[t]) == expected;
      }
    // Orthogonal idempotents summing to one.
    AlgebraElement acc = A.zero();
    for (unsigned s = 0; s < n; ++s) {
      acc = acc + idem[s];
      for (unsigned t = 0; t < n && idem_form; ++t)
        idem_form = idem[s] * idem[t] ==
                    (s == t ? idem[s] : A.zero());
    }
    idem_form = idem_form && acc == A.unit();
    r.add("cyclic:idempotent-form", idem_form);

    // The k(Id, 1) view: classification and the closed-form orthogonals
    // with mu(t) = -t, d = 1/n.
    OmegaSpec spec;
    spec.s_size = n;
    spec.capN = 1;
    spec.omega.resize(n);
    for (unsigned s = 0; s < n; ++s) spec.omega[s] = s;
    OmegaAlgebra view(spec, field);
    r.add(verify_classification(view, opts.budget));
    CanonicalFormSpec fs;
    fs.mu.resize(n);
    for (unsigned s = 0; s < n; ++s) fs.mu[s] = (n - s) % n;
    fs.nu = {0};
    fs.d.assign(n, inv_n);
    r.add(verify_orthogonal_closed_form(view, fs));
  } catch (const NoSuchRoot&) {
    r.add("cyclic:idempotent-form", true,
          "skipped: no primitive root in the base field");
  }

  suite_monomial_certificate(form, r);
  suite_subspace_lattice(form, rng, opts.samples, r);
  suite_action_transport(form, A, rng, opts.samples, r);
  suite_hopf_form_lemmas(H, rng, opts.samples, r);
  // Right ideals generated by random elements stand in for the N_{s,t}.
  std::vector<RightSubmodule> ideals;
  for (unsigned k = 0; k < 4; ++k)
    ideals.push_back(right_ideal_closure(A, {rng.element(A)}));
  suite_annihilator_inclusion(H, ideals, r);
  return r;
}

}  // namespace hopfcode
