// Exact field arithmetic over GF(p) and over the cyclotomic field Q(zeta_n).
//
// Elements are immutable values in canonical form: reduced residues for the
// prime backend, reduced polynomials modulo the n-th cyclotomic polynomial
// with fully canonicalized rational coefficients for the cyclotomic backend.
// Equality is equality of canonical forms; there is no floating point and no
// tolerance anywhere.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "hopfcode/errors.hpp"

namespace hopfcode {

enum class FieldKind { prime, cyclotomic };

struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint64_t p = 0;  // prime modulus (prime kind)
  unsigned n = 0;       // cyclotomic order (cyclotomic kind)

  static FieldSpec prime(std::uint64_t p) { return {FieldKind::prime, p, 0}; }
  static FieldSpec cyclotomic(unsigned n) {
    return {FieldKind::cyclotomic, 0, n};
  }
  bool operator==(const FieldSpec&) const = default;
};

namespace detail {
struct FieldData;
}

class Scalar;

// Immutable field handle; cheap to copy, safe to share across threads.
class Field {
 public:
  Field() = default;

  // Throws CompositeModulus if p is not prime.
  static Field prime(std::uint64_t p);
  // Throws InvalidOrder if n < 1. The reduction polynomial is the n-th
  // cyclotomic polynomial, computed exactly.
  static Field cyclotomic(unsigned n);
  static Field make(const FieldSpec& spec);

  bool valid() const { return data_ != nullptr; }
  FieldKind kind() const;
  FieldSpec spec() const;
  std::uint64_t characteristic() const;  // p, or 0 for cyclotomic
  std::uint64_t modulus() const;         // prime kind only
  unsigned cyclotomic_order() const;     // cyclotomic kind only
  // Degree of the field over its prime field / over Q (deg of Phi_n).
  unsigned degree() const;
  // Coefficients of the reduction polynomial, low degree first, monic.
  std::vector<mpq_class> reduction_polynomial() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long v) const;
  // num/den as an element of the field; throws DivisionByZero if den
  // vanishes in the field.
  Scalar from_rational(long long num, long long den) const;
  // Cyclotomic kind: element with the given coefficient vector (length at
  // most degree()), reduced and canonicalized.
  Scalar from_coefficients(std::vector<mpq_class> coeffs) const;

  // Deterministic primitive n-th root of unity: the smallest qualifying
  // residue for the prime kind, the canonical generator power for the
  // cyclotomic kind. Throws NoSuchRoot when the divisibility precondition
  // (n | p-1, resp. n | order) fails.
  Scalar root_of_unity(unsigned n) const;

  // Parses what to_string produced: a decimal integer (prime kind) or a
  // rational "a/b" constant (cyclotomic kind).
  Scalar parse(const std::string& text) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  friend class Scalar;
  explicit Field(std::shared_ptr<const detail::FieldData> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class Scalar {
 public:
  Scalar() = default;  // invalid placeholder; any arithmetic use throws

  const Field& field() const { return field_; }
  bool valid() const { return field_.valid(); }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // DivisionByZero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Multiplicative inverse; total on nonzero inputs. Throws DivisionByZero.
  Scalar inverse() const;
  // Integer power; negative exponents go through inverse().
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Prime kind: the canonical residue in [0, p).
  std::uint64_t residue() const;
  // Cyclotomic kind: canonical coefficient vector of length degree().
  const std::vector<mpq_class>& coefficients() const;

  std::string to_string() const;

 private:
  friend class Field;
  Field field_;
  std::uint64_t residue_ = 0;         // prime kind
  std::vector<mpq_class> coeffs_;     // cyclotomic kind, size == degree()

  void require_same_field(const Scalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Deterministic total order on canonical forms (not compatible with field
// structure; used only to emit order-stable lists). Returns <0, 0, >0.
int canonical_compare(const Scalar& a, const Scalar& b);

// Multiplicative order of a nonzero scalar, or 0 if no power up to `bound`
// reaches 1. Helper for root-of-unity checks.
unsigned multiplicative_order(const Scalar& a, unsigned bound);

}  // namespace hopfcode
