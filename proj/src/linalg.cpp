#include "hopfcode/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcode {

namespace {

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix drop_zero_rows(const Matrix& m, std::size_t keep) {
  Matrix out(m.field(), keep, m.cols());
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field,
                         const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw AmbientMismatch("ragged row lengths");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw AmbientMismatch("matrix product shapes");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw AmbientMismatch("matrix-vector shapes");
  std::vector<Scalar> r(rows_, field_.zero());
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw AmbientMismatch("matrix sum shapes");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw AmbientMismatch("matrix difference shapes");
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - o.data_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return rref_in_place(copy).size();
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw NotInvertible("non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = field_.one();
  }
  auto pivots = rref_in_place(aug);
  // All pivots must land in the left block.
  if (pivots.size() != rows_ || pivots.back() >= cols_)
    throw NotInvertible("singular matrix");
  Matrix inv(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
  return Subspace(ambient, Matrix(field, 0, ambient));
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(field, ambient));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length");
  std::vector<Scalar> r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // Reduce r by the i-th canonical basis row (pivot entry is 1).
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
    if (p == ambient_ || r[p].is_zero()) continue;
    Scalar f = r[p];
    for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return std::all_of(r.begin(), r.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("ambient dims");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::canonical_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_; ++j) {
      int c = canonical_compare(a.basis_.at(i, j), b.basis_.at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

std::string Subspace::to_string() const {
  if (dim() == 0) return "{0}\n";
  return basis_.to_string();
}

Subspace echelonize(const Matrix& m) {
  Matrix copy = m;
  auto pivots = rref_in_place(copy);
  return Subspace(m.cols(), drop_zero_rows(copy, pivots.size()));
}

Subspace span_of(const Field& field, std::size_t ambient,
                 const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return Subspace::zero(field, ambient);
  Matrix m = Matrix::from_rows(field, vectors);
  if (m.cols() != ambient) throw AmbientMismatch("span vector length");
  return echelonize(m);
}

Subspace kernel(const Matrix& m) {
  Matrix copy = m;
  auto pivots = rref_in_place(copy);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  const Field& f = m.field();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -copy.at(r, free);
    basis.push_back(std::move(v));
  }
  return span_of(f, m.cols(), basis);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw AmbientMismatch("subspace sum");
  if (u.field() != w.field()) throw FieldMismatch("subspace sum");
  Matrix stacked(u.field(), u.dim() + w.dim(), u.ambient_dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.ambient_dim(); ++j)
      stacked.at(i, j) = u.basis().at(i, j);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.ambient_dim(); ++j)
      stacked.at(u.dim() + i, j) = w.basis().at(i, j);
  return echelonize(stacked);
}

// Zassenhaus: row reduce [U | U; W | 0]; rows with zero left half carry an
// intersection basis in their right half.
Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw AmbientMismatch("subspace intersection");
  if (u.field() != w.field()) throw FieldMismatch("subspace intersection");
  const std::size_t n = u.ambient_dim();
  Matrix block(u.field(), u.dim() + w.dim(), 2 * n);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block.at(i, j) = u.basis().at(i, j);
      block.at(i, n + j) = u.basis().at(i, j);
    }
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) block.at(u.dim() + i, j) = w.basis().at(i, j);
  rref_in_place(block);
  std::vector<std::vector<Scalar>> inter;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      left_zero = block.at(i, j).is_zero();
    if (!left_zero) continue;
    std::vector<Scalar> v;
    v.reserve(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      v.push_back(block.at(i, n + j));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (nonzero) inter.push_back(std::move(v));
  }
  return span_of(u.field(), n, inter);
}

bool is_direct_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) return true;
  const std::size_t ambient = parts.front().ambient_dim();
  Subspace total = Subspace::zero(parts.front().field(), ambient);
  std::size_t dim_sum = 0;
  for (const auto& p : parts) {
    if (p.ambient_dim() != ambient) throw AmbientMismatch("direct sum parts");
    total = subspace_sum(total, p);
    dim_sum += p.dim();
  }
  if (total.dim() != dim_sum) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (subspace_intersect(parts[i], parts[j]).dim() != 0) return false;
  return true;
}

Subspace map_subspace(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw AmbientMismatch("map_subspace");
  std::vector<std::vector<Scalar>> images;
  images.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    images.push_back(m.apply(s.basis_row(i)));
  return span_of(m.field(), m.rows(), images);
}

}  // namespace hopfcode
