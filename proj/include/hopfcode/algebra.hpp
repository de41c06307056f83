// Finite-dimensional associative algebras given by structure constants,
// element arithmetic, and right-submodule machinery. Associativity and the
// unit law are verified exactly at construction, so a handle that exists is
// a handle to an actual algebra.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcode/linalg.hpp"

namespace hopfcode {

class AlgebraElement;

namespace detail {
struct AlgebraData;
}

class StructureAlgebra {
 public:
  // mul[i][j] holds the coordinates of basis_i * basis_j. Throws Error if
  // associativity or the unit law fails on any basis triple.
  StructureAlgebra(Field field, std::vector<std::string> basis_labels,
                   std::vector<std::vector<std::vector<Scalar>>> mul,
                   std::vector<Scalar> unit);

  std::size_t dim() const;
  const Field& field() const;
  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const;
  const std::vector<Scalar>& product_coords(std::size_t i,
                                            std::size_t j) const;
  const std::vector<Scalar>& unit_coords() const;

  AlgebraElement element(std::vector<Scalar> coords) const;
  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement unit() const;
  AlgebraElement zero() const;

  // Column-convention matrices of left/right multiplication: v -> a v, v a.
  Matrix left_mult_matrix(const AlgebraElement& a) const;
  Matrix right_mult_matrix(const AlgebraElement& a) const;

  // Handles compare by identity: elements may only be combined when they
  // live in the same constructed algebra.
  bool same(const StructureAlgebra& o) const { return data_ == o.data_; }

 private:
  friend class AlgebraElement;
  std::shared_ptr<const detail::AlgebraData> data_;
};

class AlgebraElement {
 public:
  const StructureAlgebra& algebra() const { return algebra_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& coord(std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // AlgebraMismatch
  AlgebraElement operator*(const Scalar& c) const;
  AlgebraElement operator-() const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // Two-sided inverse; throws NotInvertible when the left-multiplication
  // matrix is singular.
  AlgebraElement inverse() const;
  AlgebraElement pow(unsigned e) const;

  std::string to_string() const;

 private:
  friend class StructureAlgebra;
  AlgebraElement(StructureAlgebra alg, std::vector<Scalar> coords)
      : algebra_(std::move(alg)), coords_(std::move(coords)) {}
  StructureAlgebra algebra_;
  std::vector<Scalar> coords_;
};

// A subspace of the algebra's coordinate space that is closed under right
// multiplication by every basis element (verified at construction).
class RightSubmodule {
 public:
  RightSubmodule(StructureAlgebra alg, Subspace space);

  const StructureAlgebra& algebra() const { return algebra_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  bool operator==(const RightSubmodule& o) const {
    return space_ == o.space_;
  }

 private:
  StructureAlgebra algebra_;
  Subspace space_;
};

bool is_right_submodule(const StructureAlgebra& alg, const Subspace& s);

// Smallest right submodule containing the generators: iterated closure under
// right multiplication by basis elements, to a fixpoint.
RightSubmodule right_ideal_closure(const StructureAlgebra& alg,
                                   const std::vector<AlgebraElement>& gens);

// {h : y h = 0 for all y in I} as a subspace.
Subspace right_annihilator(const StructureAlgebra& alg, const Subspace& ideal);

// Decides indecomposability by the direct-sum definition against the
// complete submodule enumeration of the ambient algebra.
bool is_indecomposable(const RightSubmodule& m,
                       const std::vector<RightSubmodule>& all_submodules);

}  // namespace hopfcode
