#include <doctest.h>

#include "hopfcode/scalar.hpp"

using namespace hopfcode;

namespace {

// Independent oracle: exact division of X^n - 1 by the hardcoded lower
// cyclotomic polynomials, over the rationals.
std::vector<mpq_class> divide_exact(std::vector<mpq_class> num,
                                    const std::vector<mpq_class>& den) {
  std::vector<mpq_class> quot(num.size() - den.size() + 1, mpq_class(0));
  for (std::size_t i = num.size(); i-- >= den.size() && i + 1 >= den.size();) {
    mpq_class c = num[i] / den.back();
    quot[i - (den.size() - 1)] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i - (den.size() - 1) + j] -= c * den[j];
    if (i + 1 == den.size()) break;
  }
  for (const auto& c : num) REQUIRE(c == 0);
  return quot;
}

// Independent oracle: multiplicative order by repeated multiplication.
unsigned order_mod(std::uint64_t r, std::uint64_t p) {
  std::uint64_t acc = r % p;
  for (unsigned k = 1; k <= p; ++k) {
    if (acc == 1) return k;
    acc = acc * r % p;
  }
  return 0;
}

}  // namespace

TEST_CASE("prime field creation validates the modulus") {
  Field f7 = Field::prime(7);
  CHECK(f7.kind() == FieldKind::prime);
  CHECK(f7.modulus() == 7);
  // Seven distinct elements.
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      CHECK(f7.from_integer(a) != f7.from_integer(b));
  CHECK_THROWS_AS(Field::prime(6), CompositeModulus);
  CHECK_THROWS_AS(Field::prime(1), CompositeModulus);
  CHECK_THROWS_AS(Field::cyclotomic(0), InvalidOrder);
}

TEST_CASE("cyclotomic field reduces modulo the exact cyclotomic polynomial") {
  // Phi_6 = (X^6 - 1) / (Phi_1 Phi_2 Phi_3), computed independently here.
  std::vector<mpq_class> x6m1(7, mpq_class(0));
  x6m1[0] = -1;
  x6m1[6] = 1;
  auto q1 = divide_exact(x6m1, {mpq_class(-1), mpq_class(1)});        // X - 1
  auto q2 = divide_exact(q1, {mpq_class(1), mpq_class(1)});           // X + 1
  auto q3 = divide_exact(q2, {mpq_class(1), mpq_class(1), mpq_class(1)});
  REQUIRE(q3.size() == 3);
  CHECK(q3[0] == 1);
  CHECK(q3[1] == -1);
  CHECK(q3[2] == 1);

  Field f = Field::cyclotomic(6);
  auto phi = f.reduction_polynomial();
  REQUIRE(phi.size() == 3);
  CHECK(phi[0] == q3[0]);
  CHECK(phi[1] == q3[1]);
  CHECK(phi[2] == q3[2]);
  CHECK(f.degree() == 2);
}

TEST_CASE("primitive roots of unity are the smallest qualifying residues") {
  Field f7 = Field::prime(7);
  // Oracle: exhaustive order check over GF(7).
  auto smallest_of_order = [](unsigned n, std::uint64_t p) -> std::uint64_t {
    for (std::uint64_t r = 1; r < p; ++r)
      if (order_mod(r, p) == n) return r;
    return 0;
  };
  CHECK(f7.root_of_unity(3).residue() == smallest_of_order(3, 7));
  CHECK(f7.root_of_unity(3).residue() == 2);
  CHECK(f7.root_of_unity(6).residue() == smallest_of_order(6, 7));
  CHECK(f7.root_of_unity(6).residue() == 3);
  CHECK_THROWS_AS(f7.root_of_unity(5), NoSuchRoot);

  // rho^k = 1 iff n | k, for k up to 2n.
  for (unsigned n : {1u, 2u, 3u, 6u}) {
    Scalar rho = f7.root_of_unity(n);
    for (unsigned k = 1; k <= 2 * n; ++k)
      CHECK(rho.pow(k).is_one() == (k % n == 0));
  }
  Field fc = Field::cyclotomic(6);
  Scalar zeta = fc.root_of_unity(6);
  for (unsigned k = 1; k <= 12; ++k)
    CHECK(zeta.pow(k).is_one() == (k % 6 == 0));
  CHECK_THROWS_AS(fc.root_of_unity(4), NoSuchRoot);
}

TEST_CASE("scalar inversion is total on nonzero inputs") {
  Field f7 = Field::prime(7);
  // Oracle: exhaustive search mod 7 for the inverse of 12 = 5.
  std::uint64_t expected = 0;
  for (std::uint64_t v = 1; v < 7; ++v)
    if (12 % 7 * v % 7 == 1) expected = v;
  REQUIRE(expected == 3);
  CHECK(f7.from_integer(12).inverse().residue() == expected);
  CHECK(f7.one().inverse().is_one());
  CHECK_THROWS_AS(f7.zero().inverse(), DivisionByZero);

  Field fc = Field::cyclotomic(6);
  Scalar z = fc.root_of_unity(6);
  Scalar a = z + fc.from_rational(1, 2);
  CHECK((a * a.inverse()).is_one());
  CHECK_THROWS_AS(fc.zero().inverse(), DivisionByZero);
}

TEST_CASE("field axioms hold on exhaustive small samples") {
  auto check_axioms = [](const Field& f, const std::vector<Scalar>& sample) {
    for (const auto& a : sample)
      for (const auto& b : sample) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : sample) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      }
    (void)f;
  };
  Field f5 = Field::prime(5);
  std::vector<Scalar> all5;
  for (int v = 0; v < 5; ++v) all5.push_back(f5.from_integer(v));
  check_axioms(f5, all5);

  Field fc = Field::cyclotomic(4);
  Scalar i = fc.root_of_unity(4);
  std::vector<Scalar> sample = {fc.zero(), fc.one(), i, i + fc.one(),
                                fc.from_rational(-3, 2), i * i - fc.one()};
  check_axioms(fc, sample);
}

TEST_CASE("cyclotomic canonical form stays below the reduction degree") {
  Field fc = Field::cyclotomic(6);
  Scalar z = fc.root_of_unity(6);
  Scalar acc = fc.one();
  for (unsigned k = 0; k < 12; ++k) {
    acc = acc * z;
    CHECK(acc.coefficients().size() == fc.degree());
  }
  CHECK(z.pow(6).is_one());
  // Canonical rationals: equal values compare equal.
  CHECK(fc.from_rational(1, 2) == fc.from_rational(2, 4));
  CHECK(fc.from_rational(-1, 2) == fc.from_rational(1, -2));
}

TEST_CASE("scalar parsing round-trips") {
  Field f7 = Field::prime(7);
  CHECK(f7.parse("12") == f7.from_integer(5));
  CHECK(f7.parse("-1") == f7.from_integer(6));
  CHECK_THROWS_AS(f7.parse("zap"), Error);
  Field fc = Field::cyclotomic(4);
  CHECK(fc.parse("3/4") == fc.from_rational(3, 4));
}
