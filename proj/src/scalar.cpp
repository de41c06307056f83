#include "hopfcode/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace hopfcode {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::prime;
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<mpq_class> phi;  // reduction polynomial, monic, low degree first
  unsigned degree = 1;
};

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Quotient of f by a monic divisor g; requires exact divisibility.
std::vector<mpz_class> exact_div(const std::vector<mpz_class>& f,
                                 const std::vector<mpz_class>& g) {
  std::vector<mpz_class> rem = f;
  const std::size_t dg = g.size() - 1;
  std::vector<mpz_class> q(rem.size() - dg, 0);
  for (std::size_t i = rem.size(); i-- > dg;) {
    mpz_class c = rem[i];
    if (c == 0) continue;
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= c * g[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw Error("cyclotomic polynomial division not exact");
  return q;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned n) {
  // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<mpz_class> f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) f = exact_div(f, cyclotomic_polynomial(d));
  return f;
}

std::vector<unsigned> prime_factors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(static_cast<unsigned>(q));
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

}  // namespace
}  // namespace detail

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 32))
    throw CompositeModulus("modulus too large for the prime backend");
  if (!detail::is_prime_u64(p)) throw CompositeModulus(std::to_string(p));
  auto data = std::make_shared<detail::FieldData>();
  data->kind = FieldKind::prime;
  data->p = p;
  data->degree = 1;
  return Field(std::move(data));
}

Field Field::cyclotomic(unsigned n) {
  if (n < 1) throw InvalidOrder("cyclotomic order must be at least 1");
  auto data = std::make_shared<detail::FieldData>();
  data->kind = FieldKind::cyclotomic;
  data->n = n;
  auto phi = detail::cyclotomic_polynomial(n);
  data->phi.reserve(phi.size());
  for (auto& c : phi) data->phi.emplace_back(c);
  data->degree = static_cast<unsigned>(phi.size() - 1);
  return Field(std::move(data));
}

Field Field::make(const FieldSpec& spec) {
  return spec.kind == FieldKind::prime ? prime(spec.p) : cyclotomic(spec.n);
}

FieldKind Field::kind() const { return data_->kind; }

FieldSpec Field::spec() const {
  return data_->kind == FieldKind::prime ? FieldSpec::prime(data_->p)
                                         : FieldSpec::cyclotomic(data_->n);
}

std::uint64_t Field::characteristic() const {
  return data_->kind == FieldKind::prime ? data_->p : 0;
}

std::uint64_t Field::modulus() const {
  if (data_->kind != FieldKind::prime)
    throw Error("modulus() on a non-prime field");
  return data_->p;
}

unsigned Field::cyclotomic_order() const {
  if (data_->kind != FieldKind::cyclotomic)
    throw Error("cyclotomic_order() on a non-cyclotomic field");
  return data_->n;
}

unsigned Field::degree() const { return data_->degree; }

std::vector<mpq_class> Field::reduction_polynomial() const {
  if (data_->kind != FieldKind::cyclotomic)
    throw Error("reduction_polynomial() on a non-cyclotomic field");
  return data_->phi;
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->kind == other.data_->kind && data_->p == other.data_->p &&
         data_->n == other.data_->n;
}

Scalar Field::zero() const { return from_integer(0); }
Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(long long v) const {
  Scalar s;
  s.field_ = *this;
  if (data_->kind == FieldKind::prime) {
    long long m = v % static_cast<long long>(data_->p);
    if (m < 0) m += static_cast<long long>(data_->p);
    s.residue_ = static_cast<std::uint64_t>(m);
  } else {
    s.coeffs_.assign(data_->degree, mpq_class(0));
    s.coeffs_[0] = static_cast<long>(v);
  }
  return s;
}

Scalar Field::from_rational(long long num, long long den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (data_->kind == FieldKind::prime)
    return from_integer(num) / from_integer(den);
  Scalar s;
  s.field_ = *this;
  s.coeffs_.assign(data_->degree, mpq_class(0));
  s.coeffs_[0] = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.coeffs_[0].canonicalize();
  return s;
}

Scalar Field::from_coefficients(std::vector<mpq_class> coeffs) const {
  if (data_->kind != FieldKind::cyclotomic)
    throw Error("from_coefficients() on a non-cyclotomic field");
  // Reduce modulo the (monic) cyclotomic polynomial.
  const auto& phi = data_->phi;
  const std::size_t deg = data_->degree;
  while (coeffs.size() > deg) {
    mpq_class lead = coeffs.back();
    std::size_t top = coeffs.size() - 1;
    coeffs.pop_back();
    if (lead != 0)
      for (std::size_t j = 0; j < deg; ++j)
        coeffs[top - deg + j] -= lead * phi[j];
  }
  coeffs.resize(deg, mpq_class(0));
  for (auto& c : coeffs) c.canonicalize();
  Scalar s;
  s.field_ = *this;
  s.coeffs_ = std::move(coeffs);
  return s;
}

Scalar Field::root_of_unity(unsigned n) const {
  if (n < 1) throw InvalidOrder("root order must be at least 1");
  if (data_->kind == FieldKind::prime) {
    const std::uint64_t p = data_->p;
    if ((p - 1) % n != 0)
      throw NoSuchRoot("order " + std::to_string(n) +
                       " does not divide p-1 = " + std::to_string(p - 1));
    auto factors = detail::prime_factors(n);
    for (std::uint64_t r = 1; r < p; ++r) {
      if (detail::powmod(r, n, p) != 1) continue;
      bool primitive = true;
      for (unsigned q : factors)
        if (detail::powmod(r, n / q, p) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        Scalar s;
        s.field_ = *this;
        s.residue_ = r;
        return s;
      }
    }
    throw NoSuchRoot("no residue of order " + std::to_string(n));
  }
  if (data_->n % n != 0)
    throw NoSuchRoot("order " + std::to_string(n) +
                     " does not divide the cyclotomic order " +
                     std::to_string(data_->n));
  std::vector<mpq_class> x(data_->n / n + 1, mpq_class(0));
  x.back() = 1;
  return from_coefficients(std::move(x));
}

Scalar Field::parse(const std::string& text) const {
  try {
    if (data_->kind == FieldKind::prime) {
      std::size_t pos = 0;
      long long v = std::stoll(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
      return from_integer(v);
    }
    mpq_class q(text);
    q.canonicalize();
    std::vector<mpq_class> coeffs(data_->degree, mpq_class(0));
    coeffs[0] = q;
    Scalar s;
    s.field_ = *this;
    s.coeffs_ = std::move(coeffs);
    return s;
  } catch (const std::invalid_argument&) {
    throw Error("cannot parse scalar: " + text);
  } catch (const std::out_of_range&) {
    throw Error("cannot parse scalar: " + text);
  }
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!field_.valid() || !o.field_.valid())
    throw FieldMismatch("uninitialized scalar");
  if (field_ != o.field_) throw FieldMismatch("scalars from different fields");
}

bool Scalar::is_zero() const {
  if (!field_.valid()) throw FieldMismatch("uninitialized scalar");
  if (field_.kind() == FieldKind::prime) return residue_ == 0;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_one() const { return *this == field_.one(); }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.kind() == FieldKind::prime) {
    r.residue_ = (residue_ + o.residue_) % field_.data_->p;
  } else {
    r.coeffs_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (!field_.valid()) throw FieldMismatch("uninitialized scalar");
  Scalar r;
  r.field_ = field_;
  if (field_.kind() == FieldKind::prime) {
    r.residue_ = residue_ == 0 ? 0 : field_.data_->p - residue_;
  } else {
    r.coeffs_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i] = -coeffs_[i];
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind() == FieldKind::prime) {
    Scalar r;
    r.field_ = field_;
    r.residue_ = detail::mulmod(residue_, o.residue_, field_.data_->p);
    return r;
  }
  std::vector<mpq_class> prod(2 * coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return field_.from_coefficients(std::move(prod));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_.kind() == FieldKind::prime) {
    Scalar r;
    r.field_ = field_;
    r.residue_ =
        detail::powmod(residue_, field_.data_->p - 2, field_.data_->p);
    return r;
  }
  // Extended Euclid in Q[X] against the irreducible reduction polynomial.
  using Poly = std::vector<mpq_class>;
  auto deg = [](const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
      if (f[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  Poly r0 = field_.data_->phi;
  Poly r1 = coeffs_;
  Poly s0(1, mpq_class(0)), s1(1, mpq_class(1));  // coefficients of *this
  while (deg(r1) > 0) {
    long d0 = deg(r0), d1 = deg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    mpq_class c = r0[d0] / r1[d1];
    long shift = d0 - d1;
    for (long j = 0; j <= d1; ++j) r0[j + shift] -= c * r1[j];
    if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, 0);
    for (std::size_t j = 0; j < s1.size(); ++j)
      if (s1[j] != 0) s0[j + shift] -= c * s1[j];
  }
  if (deg(r1) != 0) throw DivisionByZero("element not invertible");
  mpq_class unit = r1[0];
  for (auto& c : s1) c /= unit;
  return field_.from_coefficients(std::move(s1));
}

Scalar Scalar::pow(long long e) const {
  if (!field_.valid()) throw FieldMismatch("uninitialized scalar");
  if (e < 0) return inverse().pow(-e);
  Scalar acc = field_.one();
  Scalar base = *this;
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  if (field_.kind() == FieldKind::prime) return residue_ == o.residue_;
  return coeffs_ == o.coeffs_;
}

std::uint64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::prime)
    throw Error("residue() on a non-prime scalar");
  return residue_;
}

const std::vector<mpq_class>& Scalar::coefficients() const {
  if (field_.kind() != FieldKind::cyclotomic)
    throw Error("coefficients() on a non-cyclotomic scalar");
  return coeffs_;
}

std::string Scalar::to_string() const {
  if (!field_.valid()) return "<invalid>";
  if (field_.kind() == FieldKind::prime) return std::to_string(residue_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    std::string c = coeffs_[k].get_str();
    if (!first) {
      if (c[0] == '-') {
        os << '-';
        c.erase(0, 1);
      } else {
        os << '+';
      }
    }
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != "1") os << c << '*';
      os << 'z';
      if (k > 1) os << '^' << k;
    }
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

int canonical_compare(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) throw FieldMismatch("canonical_compare");
  if (a.field().kind() == FieldKind::prime) {
    if (a.residue() < b.residue()) return -1;
    return a.residue() == b.residue() ? 0 : 1;
  }
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c;
  }
  return 0;
}

unsigned multiplicative_order(const Scalar& a, unsigned bound) {
  Scalar acc = a;
  for (unsigned k = 1; k <= bound; ++k) {
    if (acc.is_one()) return k;
    acc = acc * a;
  }
  return 0;
}

}  // namespace hopfcode
