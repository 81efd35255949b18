// Exact division and gcd in Q[x_1^{±1}, ..., x_n^{±1}].
//
// Laurent inputs are first shifted into the polynomial ring with each
// variable's minimal exponent zero; monomials are units so this does not
// change divisibility. The gcd is the recursive content / primitive-part
// algorithm over one main variable at a time with primitive pseudo-remainder
// sequences.

#include <algorithm>
#include <stdexcept>

#include "linkslope/laurent_poly.hpp"

namespace linkslope {

namespace {

Exponent negated(const Exponent& e) {
  Exponent r(e.size());
  std::transform(e.begin(), e.end(), r.begin(), [](int x) { return -x; });
  return r;
}

LaurentPoly to_polynomial(const LaurentPoly& p) { return p.shifted(negated(p.min_exponents())); }

// Division of polynomials (nonnegative exponents) under lex order.
std::optional<LaurentPoly> polynomial_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q(a.nvars());
  LaurentPoly r = a;
  const Exponent& lb = b.leading_exponent();
  const Rational& cb = b.leading_coefficient();
  Exponent diff(a.nvars());
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lr[i] - lb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    Rational c = r.leading_coefficient() / cb;
    q.add_term(diff, c);
    r -= b.shifted(diff) * c;
  }
  return q;
}

int highest_variable(const LaurentPoly& a, const LaurentPoly& b) {
  for (int v = static_cast<int>(a.nvars()) - 1; v >= 0; --v) {
    if (a.involves(v) || b.involves(v)) return v;
  }
  return -1;
}

// Coefficient of x_v^d, as a polynomial with x_v absent.
LaurentPoly coefficient_in(const LaurentPoly& p, std::size_t v, int d) {
  LaurentPoly c(p.nvars());
  for (const auto& [e, coeff] : p.terms()) {
    if (e[v] != d) continue;
    Exponent ne = e;
    ne[v] = 0;
    c.add_term(ne, coeff);
  }
  return c;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  std::map<int, LaurentPoly> groups;
  for (const auto& [e, coeff] : p.terms()) {
    Exponent ne = e;
    ne[v] = 0;
    auto [it, inserted] = groups.try_emplace(e[v], p.nvars());
    it->second.add_term(ne, coeff);
  }
  LaurentPoly g(p.nvars());
  for (auto& [d, c] : groups) {
    g = g.is_zero() ? normalize_associate(c) : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, std::size_t v) {
  LaurentPoly c = content_in(p, v);
  if (c.is_constant()) return p;
  auto q = polynomial_quotient(p, c);
  if (!q) throw std::logic_error("primitive_part: content does not divide");
  return *q;
}

LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
  const int db = b.degree(v);
  const LaurentPoly lcb = coefficient_in(b, v, db);
  while (!a.is_zero() && a.degree(v) >= db) {
    const int da = a.degree(v);
    LaurentPoly lca = coefficient_in(a, v, da);
    Exponent shift(a.nvars(), 0);
    shift[v] = da - db;
    a = lcb * a - lca * b.shifted(shift);
  }
  return a;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize_associate(b);
  if (b.is_zero()) return normalize_associate(a);
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return LaurentPoly(n, Rational(1));
  if (auto q = polynomial_quotient(a, b)) return normalize_associate(b);
  if (auto q = polynomial_quotient(b, a)) return normalize_associate(a);

  const int v = highest_variable(a, b);
  if (v < 0) return LaurentPoly(n, Rational(1));
  const std::size_t var = static_cast<std::size_t>(v);

  LaurentPoly ca = content_in(a, var);
  LaurentPoly cb = content_in(b, var);
  LaurentPoly c = poly_gcd(ca, cb);

  LaurentPoly pa = primitive_part(a, var);
  LaurentPoly pb = primitive_part(b, var);
  LaurentPoly g(n, Rational(1));
  if (pa.involves(var) && pb.involves(var)) {
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    while (true) {
      LaurentPoly r = pseudo_remainder(pa, pb, var);
      if (r.is_zero()) {
        g = primitive_part(pb, var);
        break;
      }
      if (!r.involves(var)) break;  // primitive parts are coprime
      pa = std::move(pb);
      pb = primitive_part(r, var);
    }
  }
  return normalize_associate(g * c);
}

}  // namespace

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero");
  if (a.is_zero()) return LaurentPoly(std::max(a.nvars(), b.nvars()));
  if (b.is_monomial()) {
    const auto& [e, c] = *b.terms().begin();
    return a.shifted(negated(e)) * (1 / c);
  }
  if (a.nvars() != b.nvars()) throw std::invalid_argument("exact_quotient: variable count mismatch");
  const Exponent ma = a.min_exponents();
  const Exponent mb = b.min_exponents();
  auto q = polynomial_quotient(a.shifted(negated(ma)), b.shifted(negated(mb)));
  if (!q) return std::nullopt;
  Exponent shift(ma.size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = ma[i] - mb[i];
  return q->shifted(shift);
}

LaurentPoly associate_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("associate_unit: zero polynomial");
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  return LaurentPoly::monomial(negated(p.min_exponents()), scale);
}

LaurentPoly normalize_associate(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly u = associate_unit(p);
  const auto& [e, c] = *u.terms().begin();
  return p.shifted(e) * c;
}

bool are_associates(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_associate(a) == normalize_associate(b);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly(std::max(a.nvars(), b.nvars()));
  if (a.is_zero()) return normalize_associate(b);
  if (b.is_zero()) return normalize_associate(a);
  if (a.nvars() != b.nvars()) throw std::invalid_argument("gcd: variable count mismatch");
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(a.nvars(), Rational(1));
  return poly_gcd(to_polynomial(a), to_polynomial(b));
}

LaurentPoly multivariate_gcd(std::span<const LaurentPoly> ps) {
  if (ps.empty()) throw std::invalid_argument("multivariate_gcd: empty input");
  LaurentPoly g(ps.front().nvars());
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

}  // namespace linkslope
