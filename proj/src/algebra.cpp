#include "hopfcode/algebra.hpp"

#include <sstream>

namespace hopfcode {

namespace detail {

struct AlgebraData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  // mul[i * dim + j] = coordinates of basis_i * basis_j
  std::vector<std::vector<Scalar>> mul;
  std::vector<Scalar> unit;
};

namespace {

// out += (a * b) by bilinear extension of the structure constants.
void accumulate_product(const AlgebraData& d, const std::vector<Scalar>& a,
                        const std::vector<Scalar>& b, std::vector<Scalar>& out) {
  for (std::size_t i = 0; i < d.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d.dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar f = a[i] * b[j];
      const auto& prod = d.mul[i * d.dim + j];
      for (std::size_t k = 0; k < d.dim; ++k)
        if (!prod[k].is_zero()) out[k] += f * prod[k];
    }
  }
}

}  // namespace
}  // namespace detail

StructureAlgebra::StructureAlgebra(
    Field field, std::vector<std::string> basis_labels,
    std::vector<std::vector<std::vector<Scalar>>> mul,
    std::vector<Scalar> unit) {
  auto data = std::make_shared<detail::AlgebraData>();
  data->field = std::move(field);
  data->dim = basis_labels.size();
  data->labels = std::move(basis_labels);
  const std::size_t n = data->dim;
  if (mul.size() != n || unit.size() != n)
    throw Error("structure constant table has inconsistent dimensions");
  data->mul.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mul[i].size() != n)
      throw Error("structure constant table has inconsistent dimensions");
    for (std::size_t j = 0; j < n; ++j) {
      if (mul[i][j].size() != n)
        throw Error("structure constant table has inconsistent dimensions");
      data->mul.push_back(std::move(mul[i][j]));
    }
  }
  data->unit = std::move(unit);

  // Unit law on every basis element.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> left(n, data->field.zero());
    std::vector<Scalar> right(n, data->field.zero());
    std::vector<Scalar> ei(n, data->field.zero());
    ei[i] = data->field.one();
    detail::accumulate_product(*data, data->unit, ei, left);
    detail::accumulate_product(*data, ei, data->unit, right);
    if (left != ei || right != ei)
      throw Error("unit law fails on basis element " + data->labels[i]);
  }

  // Associativity on every basis triple.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = data->mul[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> lhs(n, data->field.zero());
        for (std::size_t l = 0; l < n; ++l) {
          if (ij[l].is_zero()) continue;
          const auto& lk = data->mul[l * n + k];
          for (std::size_t m = 0; m < n; ++m)
            if (!lk[m].is_zero()) lhs[m] += ij[l] * lk[m];
        }
        std::vector<Scalar> rhs(n, data->field.zero());
        const auto& jk = data->mul[j * n + k];
        for (std::size_t l = 0; l < n; ++l) {
          if (jk[l].is_zero()) continue;
          const auto& il = data->mul[i * n + l];
          for (std::size_t m = 0; m < n; ++m)
            if (!il[m].is_zero()) rhs[m] += jk[l] * il[m];
        }
        if (lhs != rhs)
          throw Error("associativity fails on basis triple (" +
                      data->labels[i] + ", " + data->labels[j] + ", " +
                      data->labels[k] + ")");
      }
    }

  data_ = std::move(data);
}

std::size_t StructureAlgebra::dim() const { return data_->dim; }
const Field& StructureAlgebra::field() const { return data_->field; }
const std::string& StructureAlgebra::label(std::size_t i) const {
  return data_->labels[i];
}
const std::vector<std::string>& StructureAlgebra::labels() const {
  return data_->labels;
}
const std::vector<Scalar>& StructureAlgebra::product_coords(
    std::size_t i, std::size_t j) const {
  return data_->mul[i * data_->dim + j];
}
const std::vector<Scalar>& StructureAlgebra::unit_coords() const {
  return data_->unit;
}

AlgebraElement StructureAlgebra::element(std::vector<Scalar> coords) const {
  if (coords.size() != data_->dim)
    throw AmbientMismatch("element coordinate length");
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement StructureAlgebra::basis_element(std::size_t i) const {
  if (i >= data_->dim) throw IndexOutOfRange("basis index");
  std::vector<Scalar> coords(data_->dim, data_->field.zero());
  coords[i] = data_->field.one();
  return AlgebraElement(*this, std::move(coords));
}

AlgebraElement StructureAlgebra::unit() const {
  return AlgebraElement(*this, data_->unit);
}

AlgebraElement StructureAlgebra::zero() const {
  return AlgebraElement(*this,
                        std::vector<Scalar>(data_->dim, data_->field.zero()));
}

Matrix StructureAlgebra::left_mult_matrix(const AlgebraElement& a) const {
  if (!same(a.algebra())) throw AlgebraMismatch("left_mult_matrix");
  const std::size_t n = data_->dim;
  Matrix m(data_->field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> col(n, data_->field.zero());
    std::vector<Scalar> ej(n, data_->field.zero());
    ej[j] = data_->field.one();
    detail::accumulate_product(*data_, a.coords(), ej, col);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix StructureAlgebra::right_mult_matrix(const AlgebraElement& a) const {
  if (!same(a.algebra())) throw AlgebraMismatch("right_mult_matrix");
  const std::size_t n = data_->dim;
  Matrix m(data_->field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> col(n, data_->field.zero());
    std::vector<Scalar> ej(n, data_->field.zero());
    ej[j] = data_->field.one();
    detail::accumulate_product(*data_, ej, a.coords(), col);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (!algebra_.same(o.algebra_)) throw AlgebraMismatch("element sum");
  std::vector<Scalar> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  if (!algebra_.same(o.algebra_)) throw AlgebraMismatch("element difference");
  std::vector<Scalar> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (!algebra_.same(o.algebra_)) throw AlgebraMismatch("element product");
  std::vector<Scalar> c(coords_.size(), algebra_.field().zero());
  detail::accumulate_product(*algebra_.data_, coords_, o.coords_, c);
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const Scalar& s) const {
  std::vector<Scalar> c(coords_);
  for (auto& x : c) x *= s;
  return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator-() const {
  std::vector<Scalar> c(coords_);
  for (auto& x : c) x = -x;
  return AlgebraElement(algebra_, std::move(c));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return algebra_.same(o.algebra_) && coords_ == o.coords_;
}

AlgebraElement AlgebraElement::inverse() const {
  Matrix la = algebra_.left_mult_matrix(*this);
  Matrix inv = [&] {
    try {
      return la.inverse();
    } catch (const NotInvertible&) {
      throw NotInvertible("element " + to_string());
    }
  }();
  std::vector<Scalar> v = inv.apply(algebra_.unit_coords());
  AlgebraElement b(algebra_, std::move(v));
  if (!((*this * b) == algebra_.unit()) || !((b * *this) == algebra_.unit()))
    throw NotInvertible("one-sided inverse only");  // cannot happen: dim < oo
  return b;
}

AlgebraElement AlgebraElement::pow(unsigned e) const {
  AlgebraElement acc = algebra_.unit();
  AlgebraElement base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!coords_[i].is_one()) os << coords_[i].to_string() << "*";
    os << algebra_.label(i);
  }
  if (first) return "0";
  return os.str();
}

bool is_right_submodule(const StructureAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw AmbientMismatch("submodule check");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    AlgebraElement v = alg.element(s.basis_row(i));
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      AlgebraElement w = v * alg.basis_element(k);
      if (!s.contains(w.coords())) return false;
    }
  }
  return true;
}

RightSubmodule::RightSubmodule(StructureAlgebra alg, Subspace space)
    : algebra_(std::move(alg)), space_(std::move(space)) {
  if (!is_right_submodule(algebra_, space_))
    throw Error("subspace is not closed under right multiplication");
}

RightSubmodule right_ideal_closure(const StructureAlgebra& alg,
                                   const std::vector<AlgebraElement>& gens) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    if (!alg.same(g.algebra())) throw AlgebraMismatch("closure generators");
    rows.push_back(g.coords());
  }
  Subspace span = span_of(alg.field(), alg.dim(), rows);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Scalar>> next;
    for (std::size_t i = 0; i < span.dim(); ++i) {
      AlgebraElement v = alg.element(span.basis_row(i));
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        AlgebraElement w = v * alg.basis_element(k);
        if (!w.is_zero() && !span.contains(w.coords()))
          next.push_back(w.coords());
      }
    }
    if (!next.empty()) {
      for (std::size_t i = 0; i < span.dim(); ++i)
        next.push_back(span.basis_row(i));
      span = span_of(alg.field(), alg.dim(), next);
      grew = true;
    }
  }
  return RightSubmodule(alg, span);
}

Subspace right_annihilator(const StructureAlgebra& alg,
                           const Subspace& ideal) {
  if (ideal.ambient_dim() != alg.dim())
    throw AmbientMismatch("right_annihilator");
  const std::size_t n = alg.dim();
  if (ideal.dim() == 0) return Subspace::full(alg.field(), n);
  // h is annihilated iff L_y h = 0 for every basis row y of the ideal.
  Matrix stacked(alg.field(), ideal.dim() * n, n);
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    Matrix ly = alg.left_mult_matrix(alg.element(ideal.basis_row(r)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked.at(r * n + i, j) = ly.at(i, j);
  }
  return kernel(stacked);
}

bool is_indecomposable(const RightSubmodule& m,
                       const std::vector<RightSubmodule>& all_submodules) {
  if (m.dim() == 0) return false;
  std::vector<const RightSubmodule*> inside;
  for (const auto& s : all_submodules)
    if (s.dim() > 0 && s.dim() < m.dim() && m.space().contains(s.space()))
      inside.push_back(&s);
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      const auto& u = *inside[i];
      const auto& w = *inside[j];
      if (u.dim() + w.dim() != m.dim()) continue;
      if (subspace_intersect(u.space(), w.space()).dim() != 0) continue;
      if (subspace_sum(u.space(), w.space()) == m.space()) return false;
    }
  return true;
}

}  // namespace hopfcode
