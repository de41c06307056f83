#include "hopfcode/omega.hpp"

#include <algorithm>

namespace hopfcode {

void OmegaSpec::validate() const {
  if (capN < 1) throw InvalidOrder("N must be at least 1");
  if (s_size < 1) throw InvalidPermutation("S must be nonempty");
  if (omega.size() != s_size)
    throw InvalidPermutation("omega image list has wrong length");
  std::vector<bool> hit(s_size, false);
  for (unsigned img : omega) {
    if (img >= s_size || hit[img])
      throw InvalidPermutation("omega is not a bijection on S");
    hit[img] = true;
  }
}

unsigned OmegaSpec::omega_pow(unsigned s, unsigned k) const {
  unsigned r = s;
  for (unsigned i = 0; i < k; ++i) r = omega[r];
  return r;
}

namespace {

std::string default_label(const std::string& stem, unsigned m) {
  if (m == 0) return stem;
  if (m == 1) return stem + "x";
  return stem + "x" + std::to_string(m);
}

}  // namespace

OmegaAlgebra::OmegaAlgebra(OmegaSpec spec, Field field,
                           std::vector<std::string> s_labels)
    : spec_(std::move(spec)),
      algebra_([&]() -> StructureAlgebra {
        spec_.validate();
        const unsigned S = spec_.s_size, N = spec_.capN;
        const std::size_t dim = spec_.dim();
        if (!s_labels.empty() && s_labels.size() != S)
          throw InvalidPermutation("need one label per idempotent");
        std::vector<std::string> labels(dim);
        for (unsigned s = 0; s < S; ++s) {
          std::string stem =
              s_labels.empty() ? "e" + std::to_string(s) : s_labels[s];
          for (unsigned m = 0; m < N; ++m)
            labels[spec_.index_of(s, m)] = default_label(stem, m);
        }
        // (e_s x^m)(e_t x^n) = [omega^m(s) = t] e_s x^{m+n}, zero past x^N.
        std::vector<std::vector<std::vector<Scalar>>> mul(
            dim, std::vector<std::vector<Scalar>>(
                     dim, std::vector<Scalar>(dim, field.zero())));
        for (unsigned s = 0; s < S; ++s)
          for (unsigned m = 0; m < N; ++m)
            for (unsigned t = 0; t < S; ++t)
              for (unsigned n = 0; n < N; ++n) {
                if (spec_.omega_pow(s, m) != t || m + n >= N) continue;
                mul[spec_.index_of(s, m)][spec_.index_of(t, n)]
                   [spec_.index_of(s, m + n)] = field.one();
              }
        std::vector<Scalar> unit(dim, field.zero());
        for (unsigned s = 0; s < S; ++s)
          unit[spec_.index_of(s, 0)] = field.one();
        return StructureAlgebra(field, std::move(labels), std::move(mul),
                                std::move(unit));
      }()) {}

AlgebraElement OmegaAlgebra::basis(unsigned s, unsigned m) const {
  if (s >= spec_.s_size || m >= spec_.capN)
    throw IndexOutOfRange("basis index (s, m)");
  return algebra_.basis_element(spec_.index_of(s, m));
}

AlgebraElement OmegaAlgebra::x_power(unsigned k) const {
  if (k >= spec_.capN) return algebra_.zero();
  std::vector<Scalar> coords(spec_.dim(), field().zero());
  for (unsigned s = 0; s < spec_.s_size; ++s)
    coords[spec_.index_of(s, k)] = field().one();
  return algebra_.element(std::move(coords));
}

AlgebraElement OmegaAlgebra::from_x_polynomial(
    const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() > spec_.capN)
    throw IndexOutOfRange("x-polynomial degree exceeds N-1");
  std::vector<Scalar> coords(spec_.dim(), field().zero());
  for (unsigned k = 0; k < coeffs.size(); ++k)
    for (unsigned s = 0; s < spec_.s_size; ++s)
      coords[spec_.index_of(s, k)] = coeffs[k];
  return algebra_.element(std::move(coords));
}

std::optional<std::vector<Scalar>> OmegaAlgebra::x_polynomial(
    const AlgebraElement& a) const {
  if (!algebra_.same(a.algebra())) throw AlgebraMismatch("x_polynomial");
  std::vector<Scalar> coeffs(spec_.capN, field().zero());
  for (unsigned m = 0; m < spec_.capN; ++m)
    coeffs[m] = a.coord(spec_.index_of(0, m));
  for (unsigned s = 0; s < spec_.s_size; ++s)
    for (unsigned m = 0; m < spec_.capN; ++m)
      if (a.coord(spec_.index_of(s, m)) != coeffs[m]) return std::nullopt;
  return coeffs;
}

RightSubmodule OmegaAlgebra::ideal(unsigned s, unsigned t) const {
  if (s >= spec_.s_size || t >= spec_.capN)
    throw IndexOutOfRange("ideal index (s, t)");
  std::vector<std::vector<Scalar>> rows;
  for (unsigned k = t; k < spec_.capN; ++k)
    rows.push_back(basis(s, k).coords());
  return RightSubmodule(algebra_, span_of(field(), spec_.dim(), rows));
}

RightSubmodule OmegaAlgebra::scaled_ideal(const AlgebraElement& r, unsigned s,
                                          unsigned t) const {
  if (!algebra_.same(r.algebra())) throw AlgebraMismatch("scaled_ideal");
  if (!x_polynomial(r))
    throw NotInR("r has a component outside the x-subalgebra");
  AlgebraElement u = algebra_.unit() + r * x_power(1);
  RightSubmodule base = ideal(s, t);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < base.dim(); ++i)
    rows.push_back((u * algebra_.element(base.space().basis_row(i))).coords());
  Subspace scaled = span_of(field(), spec_.dim(), rows);
  if (scaled.dim() != base.dim())
    throw Error("scaled ideal changed dimension");  // u is a unit; cannot
  return RightSubmodule(algebra_, std::move(scaled));
}

std::size_t Classification::representative_count() const {
  std::size_t n = 0;
  for (const auto& c : family) n += c.canonical ? 1 : 0;
  return n;
}

Classification classify_indecomposables(
    const OmegaAlgebra& alg, std::uint64_t budget,
    const std::vector<AlgebraElement>* r_samples) {
  const OmegaSpec& spec = alg.spec();
  const Field& field = alg.field();
  Classification out;

  std::vector<AlgebraElement> rs;
  if (r_samples) {
    rs = *r_samples;
    out.sampled = true;
  } else {
    if (field.kind() != FieldKind::prime)
      throw BudgetExceeded(
          "exhaustive r requires a prime field; pass a sample set instead");
    const std::uint64_t p = field.modulus();
    // Coefficients of r above degree N-2 multiply into x^N = 0, so r
    // effectively ranges over polynomials of degree <= N-2.
    const unsigned eff = spec.capN >= 1 ? spec.capN - 1 : 0;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < eff; ++i) {
      if (count > budget / p + 1)
        throw BudgetExceeded("p^(N-1) exceeds the classification budget");
      count *= p;
      if (count > budget)
        throw BudgetExceeded("p^(N-1) exceeds the classification budget");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rem = idx;
      std::vector<Scalar> coeffs;
      for (unsigned k = 0; k < eff; ++k) {
        coeffs.push_back(field.from_integer(static_cast<long long>(rem % p)));
        rem /= p;
      }
      rs.push_back(alg.from_x_polynomial(coeffs));
    }
    if (rs.empty()) rs.push_back(alg.algebra().zero());
  }

  for (unsigned s = 0; s < spec.s_size; ++s)
    for (unsigned t = 0; t < spec.capN; ++t) {
      RightSubmodule base = alg.ideal(s, t);
      std::vector<ClassifiedIdeal> bucket;
      for (const auto& r : rs) {
        RightSubmodule m = alg.scaled_ideal(r, s, t);
        auto found = std::find_if(
            bucket.begin(), bucket.end(),
            [&](const ClassifiedIdeal& c) { return c.module == m; });
        if (found != bucket.end()) {
          ++found->multiplicity;
          continue;
        }
        bool canonical = m == base;
        ClassifiedIdeal c{s, t,
                          alg.x_polynomial(r).value_or(std::vector<Scalar>()),
                          std::move(m), canonical, 1};
        bucket.push_back(std::move(c));
      }
      std::sort(bucket.begin(), bucket.end(),
                [](const ClassifiedIdeal& a, const ClassifiedIdeal& b) {
                  return Subspace::canonical_less(a.module.space(),
                                                  b.module.space());
                });
      for (auto& c : bucket) out.family.push_back(std::move(c));
    }
  return out;
}

}  // namespace hopfcode
