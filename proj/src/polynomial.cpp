#include "hopfcode/polynomial.hpp"

#include <sstream>

namespace hopfcode {

int poly_degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

Poly poly_add(const Poly& f, const Poly& g) {
  Poly out = f.size() >= g.size() ? f : g;
  const Poly& small = f.size() >= g.size() ? g : f;
  for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
  return poly_trim(std::move(out));
}

Poly poly_sub(const Poly& f, const Poly& g) {
  return poly_add(f, poly_scale(g, g.empty() ? Scalar() : -g.front().field().one()));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  if (poly_degree(f) < 0 || poly_degree(g) < 0) return {};
  Poly out(f.size() + g.size() - 1, f.front().field().zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!g[j].is_zero()) out[i + j] += f[i] * g[j];
  }
  return poly_trim(std::move(out));
}

Poly poly_scale(const Poly& f, const Scalar& c) {
  Poly out = f;
  for (auto& x : out) x *= c;
  return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  int dg = poly_degree(g);
  if (dg < 0) throw DivisionByZero("polynomial division by zero");
  Poly rem = poly_trim(f);
  int dr = poly_degree(rem);
  if (dr < dg) return {Poly{}, std::move(rem)};
  const Field& field = g[dg].field();
  Scalar lead_inv = g[dg].inverse();
  Poly quot(static_cast<std::size_t>(dr - dg + 1), field.zero());
  while ((dr = poly_degree(rem)) >= dg) {
    Scalar c = rem[dr] * lead_inv;
    quot[dr - dg] = c;
    for (int j = 0; j <= dg; ++j)
      rem[dr - dg + j] -= c * g[j];
  }
  return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

bool poly_equal(const Poly& f, const Poly& g) {
  Poly a = poly_trim(f), b = poly_trim(g);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Scalar poly_eval(const Poly& f, const Scalar& at) {
  Scalar acc = at.field().zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * at + f[i];
  return acc;
}

Poly poly_xn_minus_one(const Field& field, unsigned n) {
  Poly f(n + 1, field.zero());
  f[0] = -field.one();
  f[n] = field.one();
  return f;
}

std::string poly_to_string(const Poly& f) {
  if (poly_degree(f) < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !f[i].is_one()) os << f[i].to_string();
    if (i >= 1) {
      if (!f[i].is_one()) os << '*';
      os << 'X';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace hopfcode
