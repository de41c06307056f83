// Dense univariate polynomials over a Field, low degree first. Only what the
// cyclic-code bridge needs: arithmetic, exact division, reversal.

#pragma once

#include <utility>
#include <vector>

#include "hopfcode/scalar.hpp"

namespace hopfcode {

using Poly = std::vector<Scalar>;

int poly_degree(const Poly& f);  // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, const Scalar& c);
// Quotient and remainder; throws DivisionByZero on zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
bool poly_equal(const Poly& f, const Poly& g);
Scalar poly_eval(const Poly& f, const Scalar& at);
// X^n - 1 over the given field.
Poly poly_xn_minus_one(const Field& field, unsigned n);
std::string poly_to_string(const Poly& f);

}  // namespace hopfcode
