// The algebra generated by orthogonal idempotents e_s (s in a finite index
// set) and a nilpotent x with x^N = 0 and e_s x = x e_{omega(s)}, together
// with its canonical indecomposable right ideals N_{s,t} = e_s x^t R and the
// scaled family (1+rx) N_{s,t}.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfcode/algebra.hpp"
#include "hopfcode/enumerate.hpp"

namespace hopfcode {

struct OmegaSpec {
  unsigned s_size = 1;                 // |S|, indices 0..|S|-1
  std::vector<unsigned> omega;         // images of the permutation on S
  unsigned capN = 1;                   // nilpotency order, >= 1

  // Throws InvalidPermutation / InvalidOrder on bad data.
  void validate() const;

  unsigned dim() const { return s_size * capN; }
  std::size_t index_of(unsigned s, unsigned m) const {
    return static_cast<std::size_t>(s) * capN + m;
  }
  std::pair<unsigned, unsigned> split(std::size_t idx) const {
    return {static_cast<unsigned>(idx / capN),
            static_cast<unsigned>(idx % capN)};
  }
  unsigned omega_pow(unsigned s, unsigned k) const;
};

// A constructed instance with basis {e_s x^m}, ordered by (s, m).
class OmegaAlgebra {
 public:
  // Throws InvalidPermutation on a non-bijective omega. Custom idempotent
  // labels (one per s) are optional.
  OmegaAlgebra(OmegaSpec spec, Field field,
               std::vector<std::string> s_labels = {});

  const OmegaSpec& spec() const { return spec_; }
  const StructureAlgebra& algebra() const { return algebra_; }
  const Field& field() const { return algebra_.field(); }

  AlgebraElement basis(unsigned s, unsigned m) const;  // e_s x^m
  AlgebraElement idempotent(unsigned s) const { return basis(s, 0); }
  AlgebraElement x_power(unsigned k) const;  // x^k = sum_s e_s x^k

  // Element of the subalgebra R = span{x^k} with the given coefficients
  // (low degree first, length <= N).
  AlgebraElement from_x_polynomial(const std::vector<Scalar>& coeffs) const;
  // Coefficients of an element of R, or nullopt if it has a component
  // outside the x-subalgebra.
  std::optional<std::vector<Scalar>> x_polynomial(
      const AlgebraElement& a) const;

  // N_{s,t}: basis {e_s x^k : t <= k <= N-1}, dimension N-t.
  RightSubmodule ideal(unsigned s, unsigned t) const;  // IndexOutOfRange
  // (1+rx) N_{s,t} for r in R; throws NotInR if r leaves the x-subalgebra.
  RightSubmodule scaled_ideal(const AlgebraElement& r, unsigned s,
                              unsigned t) const;

 private:
  OmegaSpec spec_;
  StructureAlgebra algebra_;
};

struct ClassifiedIdeal {
  unsigned s = 0, t = 0;           // representative N_{s,t}
  std::vector<Scalar> r_coords;    // first r found producing this subspace
  RightSubmodule module;
  bool canonical = false;          // r == 0, i.e. the representative itself
  unsigned multiplicity = 1;       // distinct r values with the same span
};

struct Classification {
  std::vector<ClassifiedIdeal> family;  // deduped, sorted by (s, t, basis)
  bool sampled = false;  // true when r ranged over a sample, not all of R
  std::size_t representative_count() const;
};

// The deduped family {(1+rx) N_{s,t}}. Over prime fields r ranges
// exhaustively over R (within budget); over cyclotomic fields a caller
// sample of elements of R is required and the result is tagged sampled.
Classification classify_indecomposables(
    const OmegaAlgebra& alg,
    std::uint64_t budget = default_enumeration_budget(),
    const std::vector<AlgebraElement>* r_samples = nullptr);

}  // namespace hopfcode
