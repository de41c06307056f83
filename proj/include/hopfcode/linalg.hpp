// Exact dense linear algebra over a Field: reduced row-echelon forms,
// kernels, and the subspace lattice operations every orthogonal computation
// is built on. Subspaces are identified with their canonical RREF basis, so
// subspace equality is literal matrix equality.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfcode/scalar.hpp"

namespace hopfcode {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field,
                          const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> col(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::size_t rank() const;
  // Throws NotInvertible on singular input.
  Matrix inverse() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// A linear subspace of the coordinate space of dimension `ambient`, stored
// as its unique reduced row-echelon basis (zero rows omitted, leading
// entries 1, pivot columns cleared). Two subspaces are equal iff their
// canonical bases are identical.
class Subspace {
 public:
  Subspace(std::size_t ambient, Matrix canonical_basis)
      : ambient_(ambient), basis_(std::move(canonical_basis)) {}

  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }

  std::vector<Scalar> basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Total order used to emit deterministic, order-stable subspace lists:
  // by dimension, then lexicographically on the canonical basis entries.
  static bool canonical_less(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  std::size_t ambient_;
  Matrix basis_;
};

// Row space of m in canonical form.
Subspace echelonize(const Matrix& m);
Subspace span_of(const Field& field, std::size_t ambient,
                 const std::vector<std::vector<Scalar>>& vectors);

// Right kernel {v : m v = 0}, canonical basis; dim = cols - rank.
Subspace kernel(const Matrix& m);

// Subspace lattice. All throw AmbientMismatch on inconsistent inputs.
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
bool is_direct_sum(const std::vector<Subspace>& parts);

// Image of a subspace under the linear map with (column-convention) matrix
// M, i.e. span{M v : v in basis}.
Subspace map_subspace(const Matrix& m, const Subspace& s);

}  // namespace hopfcode
