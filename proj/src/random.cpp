#include "hopfcode/random.hpp"

namespace hopfcode {

std::uint64_t DeterministicRng::next(std::uint64_t bound) {
  if (bound == 0) return 0;
  return eng_() % bound;
}

Scalar DeterministicRng::scalar(const Field& field) {
  if (field.kind() == FieldKind::prime)
    return field.from_integer(
        static_cast<long long>(next(field.modulus())));
  std::vector<mpq_class> coeffs(field.degree());
  for (auto& c : coeffs)
    c = static_cast<long>(next(7)) - 3;  // small integers keep tests fast
  return field.from_coefficients(std::move(coeffs));
}

Scalar DeterministicRng::nonzero_scalar(const Field& field) {
  for (;;) {
    Scalar s = scalar(field);
    if (!s.is_zero()) return s;
  }
}

std::vector<Scalar> DeterministicRng::vector(const Field& field,
                                             std::size_t n) {
  std::vector<Scalar> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(field));
  return v;
}

Subspace DeterministicRng::subspace(const Field& field, std::size_t ambient) {
  std::size_t rows = next(ambient + 1);
  std::vector<std::vector<Scalar>> gens;
  for (std::size_t i = 0; i < rows; ++i) gens.push_back(vector(field, ambient));
  return span_of(field, ambient, gens);
}

AlgebraElement DeterministicRng::element(const StructureAlgebra& alg) {
  return alg.element(vector(alg.field(), alg.dim()));
}

AlgebraElement DeterministicRng::invertible_element(
    const StructureAlgebra& alg, unsigned max_tries) {
  for (unsigned i = 0; i < max_tries; ++i) {
    AlgebraElement a = element(alg);
    try {
      (void)a.inverse();
      return a;
    } catch (const NotInvertible&) {
    }
  }
  throw NotInvertible("no invertible element found in sample budget");
}

}  // namespace hopfcode
