// Seeded generators for the randomized property suites. Everything is
// driven by a fixed seed so reruns are bit-for-bit reproducible.

#pragma once

#include <cstdint>
#include <random>

#include "hopfcode/algebra.hpp"

namespace hopfcode {

class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next(std::uint64_t bound);  // uniform in [0, bound)

  // Uniform residue for prime fields; small random rational coefficients
  // for cyclotomic fields.
  Scalar scalar(const Field& field);
  Scalar nonzero_scalar(const Field& field);

  std::vector<Scalar> vector(const Field& field, std::size_t n);
  // Random subspace of random dimension (0..ambient).
  Subspace subspace(const Field& field, std::size_t ambient);
  AlgebraElement element(const StructureAlgebra& alg);
  // Retries random elements until one has an invertible left-multiplication
  // matrix; throws NotInvertible after max_tries.
  AlgebraElement invertible_element(const StructureAlgebra& alg,
                                    unsigned max_tries = 256);

 private:
  std::mt19937_64 eng_;
};

}  // namespace hopfcode
