#include "linkslope/fox.hpp"

#include <algorithm>
#include <stdexcept>

#include "linkslope/errors.hpp"
#include "linkslope/evaluation.hpp"

namespace linkslope {

LaurentPoly phi(const Presentation& p, const Word& w) { return LaurentPoly::monomial(p.image(w)); }

namespace {

void add_image(Exponent& acc, const Presentation& p, const Letter& l) {
  const auto& img = p.images.at(static_cast<std::size_t>(l.gen));
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += l.exp * img[i];
}

void check_generators(const Presentation& p, const Word& w) {
  for (const auto& l : w)
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.generator_count())
      throw PreconditionError("fox_derivative: unknown generator in word");
}

}  // namespace

LaurentPoly fox_derivative(const Presentation& p, const Word& w, int gen) {
  if (gen < 0 || static_cast<std::size_t>(gen) >= p.generator_count())
    throw PreconditionError("fox_derivative: unknown generator");
  check_generators(p, w);
  LaurentPoly d(p.nvars());
  Exponent prefix(p.nvars(), 0);
  for (const auto& l : w) {
    if (l.exp > 0) {
      if (l.gen == gen) d.add_term(prefix, Rational(1));
      add_image(prefix, p, l);
    } else {
      add_image(prefix, p, l);
      if (l.gen == gen) d.add_term(prefix, Rational(-1));
    }
  }
  return d;
}

std::vector<LaurentPoly> fox_gradient(const Presentation& p, const Word& w) {
  check_generators(p, w);
  std::vector<LaurentPoly> row(p.generator_count(), LaurentPoly(p.nvars()));
  Exponent prefix(p.nvars(), 0);
  for (const auto& l : w) {
    auto& entry = row[static_cast<std::size_t>(l.gen)];
    if (l.exp > 0) {
      entry.add_term(prefix, Rational(1));
      add_image(prefix, p, l);
    } else {
      add_image(prefix, p, l);
      entry.add_term(prefix, Rational(-1));
    }
  }
  return row;
}

FoxComplex FoxComplex::build(const Presentation& p) {
  FoxComplex c;
  c.nvars = p.nvars();
  for (const auto& r : p.relators) c.d1.push_back(fox_gradient(p, r));
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    LaurentPoly x = LaurentPoly::monomial(p.images[g]);
    x -= LaurentPoly(p.nvars(), Rational(1));
    c.d0.push_back(x);
  }
  if (p.has_knot) {
    c.dm = fox_gradient(p, p.meridian);
    c.dl = fox_gradient(p, p.longitude);
  }
  return c;
}

bool FoxComplex::fundamental_identity_holds() const {
  for (const auto& row : d1) {
    LaurentPoly s(nvars);
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * d0[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

namespace {

void require_knot(const Presentation& p) {
  if (!p.has_knot) throw PreconditionError("slope: the input has no distinguished knot K (color 0)");
}

void require_size(const Presentation& p, const Character& omega) {
  if (omega.size() != static_cast<std::size_t>(p.mu))
    throw PreconditionError("character has " + std::to_string(omega.size()) + " coordinates but the link has " +
                            std::to_string(p.mu) + " colors");
}

// Finds a color whose coordinate is 1, or -1.
int trivial_color(const Character& omega) {
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (omega.coordinate_is_one(i)) return static_cast<int>(i) + 1;
  return -1;
}

template <class F, class Eval>
Matrix<F> specialize(const std::vector<std::vector<LaurentPoly>>& rows, std::size_t cols, const F& zero, Eval eval) {
  Matrix<F> m(rows.size(), cols, zero);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!rows[i][j].is_zero()) m(i, j) = eval(rows[i][j]);
  return m;
}

template <class F, class Eval>
std::vector<F> specialize_row(const std::vector<LaurentPoly>& row, const F& zero, Eval eval) {
  std::vector<F> v(row.size(), zero);
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) v[j] = eval(row[j]);
  return v;
}

template <class F, class Eval>
SlopeValue slope_with(const Presentation& p, const FoxComplex& c, const F& zero, Eval eval) {
  Matrix<F> d1 = specialize<F>(c.d1, p.generator_count(), zero, eval);
  return slope_from_specialization(d1, specialize_row<F>(c.dm, zero, eval), specialize_row<F>(c.dl, zero, eval), zero);
}

std::vector<CyclotomicElement> exact_point(const Character& omega) {
  std::vector<CyclotomicElement> pt{CyclotomicElement(Rational(1))};
  for (const auto& v : omega.exact_values()) pt.push_back(v);
  return pt;
}

std::vector<std::complex<double>> numeric_point(const Character& omega) {
  std::vector<std::complex<double>> pt{1.0};
  for (const auto& v : omega.numeric_values()) pt.push_back(v);
  return pt;
}

}  // namespace

SlopeValue slope_at(const Presentation& p, const Character& omega) {
  require_knot(p);
  if (omega.kind() == Character::Kind::Symbolic) {
    require_size(p, omega);
    return slope_symbolic(p);
  }
  require_size(p, omega);
  const std::vector<int> lambda = p.linking_vector();
  if (!is_admissible(lambda, omega))
    throw InadmissibleCharacter("character (" + omega.to_string() + ") is not admissible: omega^lambda != 1");
  if (int i = trivial_color(omega); i > 0) {
    if (p.mu == 1) throw PreconditionError("slope: the character is trivial on every color");
    return slope_at(kill_color(p, i), omega.without(static_cast<std::size_t>(i - 1)));
  }
  const FoxComplex c = FoxComplex::build(p);
  if (omega.is_exact()) {
    const auto pt = exact_point(omega);
    if (!(laurent_eval(phi(p, p.longitude), pt) == CyclotomicElement(Rational(1))))
      throw std::logic_error("slope: the longitude does not map to 1 at an admissible character");
    return slope_with<CyclotomicElement>(p, c, CyclotomicElement(),
                                         [&](const LaurentPoly& x) { return laurent_eval(x, pt); });
  }
  const auto pt = numeric_point(omega);
  return slope_with<std::complex<double>>(p, c, std::complex<double>(0.0),
                                          [&](const LaurentPoly& x) { return laurent_eval(x, pt); });
}

SlopeValue slope_symbolic(const Presentation& p) {
  require_knot(p);
  for (int l : p.linking_vector())
    if (l != 0)
      throw PreconditionError("symbolic slope needs linking vector 0; evaluate at admissible characters instead");
  const FoxComplex c = FoxComplex::build(p);
  RationalFunction zero(p.nvars());
  return slope_with<RationalFunction>(
      p, c, zero, [&](const LaurentPoly& x) { return RationalFunction(set_variable_to_one(x, 0)); });
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(0, Rational(1));
  const std::size_t nvars = m[0][0].nvars();
  int sign = 1;
  LaurentPoly prev(nvars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m[i][k].is_zero()) ++i;
      if (i == n) return LaurentPoly(nvars);
      std::swap(m[i], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_quotient(v, prev);
        if (!q) throw std::logic_error("determinant: inexact fraction-free step");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPoly(nvars);
    }
    prev = m[k][k];
  }
  LaurentPoly d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

namespace {

// Calls f on every increasing k-subset of {0..n-1}.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<LaurentPoly> minors(const std::vector<std::vector<LaurentPoly>>& m, std::size_t k) {
  std::vector<LaurentPoly> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
      std::vector<std::vector<LaurentPoly>> sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i].push_back(m[r[i]][c[j]]);
      out.push_back(determinant(std::move(sub)));
    });
  });
  return out;
}

LaurentPoly alexander_order(const Presentation& input, int r) {
  if (r < 0) throw PreconditionError("alexander_order: r must be nonnegative");
  const Presentation p = tietze_simplify(input);
  const long size = static_cast<long>(p.generator_count()) - r - 1;
  if (size <= 0) return LaurentPoly(p.nvars(), Rational(1));
  if (static_cast<std::size_t>(size) > p.relators.size()) return LaurentPoly(p.nvars());
  const FoxComplex c = FoxComplex::build(p);
  auto ms = minors(c.d1, static_cast<std::size_t>(size));
  std::vector<LaurentPoly> nonzero;
  for (auto& m : ms)
    if (!m.is_zero()) nonzero.push_back(std::move(m));
  if (nonzero.empty()) return LaurentPoly(p.nvars());
  return multivariate_gcd(nonzero);
}

int nullity_at(const Presentation& p, const Character& omega) {
  if (!omega.is_exact() && omega.kind() != Character::Kind::Numeric)
    throw PreconditionError("nullity: needs an exact or numeric character");
  require_size(p, omega);
  bool nontrivial = false;
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (!omega.coordinate_is_one(i)) nontrivial = true;
  if (!nontrivial) throw PreconditionError("nullity: the character is trivial on every color");
  if (int i = trivial_color(omega); i > 0) return nullity_at(kill_color(p, i), omega.without(static_cast<std::size_t>(i - 1)));

  const FoxComplex c = FoxComplex::build(p);
  const std::size_t gens = p.generator_count();
  auto count = [&](auto zero, auto eval) {
    using F = decltype(zero);
    Matrix<F> d1 = specialize<F>(c.d1, gens, zero, eval);
    Matrix<F> d0(gens, 1, zero);
    for (std::size_t j = 0; j < gens; ++j)
      if (!c.d0[j].is_zero()) d0(j, 0) = eval(c.d0[j]);
    return static_cast<int>(gens) - static_cast<int>(rank(d0)) - static_cast<int>(rank(d1));
  };
  if (omega.is_exact()) {
    const auto pt = exact_point(omega);
    return count(CyclotomicElement(), [&](const LaurentPoly& x) { return laurent_eval(x, pt); });
  }
  const auto pt = numeric_point(omega);
  return count(std::complex<double>(0.0), [&](const LaurentPoly& x) { return laurent_eval(x, pt); });
}

SlopeValue conway_slope(const RationalFunction& nabla_kl, const RationalFunction& nabla_l, const Character& omega,
                        const std::vector<int>& signs) {
  if (omega.kind() != Character::Kind::RootOfUnity)
    throw PreconditionError("conway route: needs a root-of-unity character to take square roots");
  const std::size_t mu = omega.size();
  if (nabla_kl.nvars() != mu + 1 || nabla_l.nvars() != mu + 1)
    throw PreconditionError("conway route: potentials must use the variables s, s1..s" + std::to_string(mu));
  if (!signs.empty() && signs.size() != mu) throw PreconditionError("conway route: one sign per color is required");
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (omega.coordinate_is_one(i)) throw PreconditionError("conway route: every coordinate must differ from 1");

  // sqrt(zeta_n^k) = zeta_{2n}^k, and zeta_{2n}^n = -1 flips the sign.
  const int n = omega.conductor();
  std::vector<CyclotomicElement> pt{CyclotomicElement(Rational(1))};
  for (std::size_t i = 0; i < mu; ++i) {
    long k = omega.exponents()[i];
    if (!signs.empty() && signs[i] < 0) k += n;
    pt.push_back(CyclotomicElement::zeta(2 * n, k));
  }
  const RationalFunction d = nabla_kl.derivative(0);
  const CyclotomicElement a_num = laurent_eval(d.numerator(), pt);
  const CyclotomicElement a_den = laurent_eval(d.denominator(), pt);
  const CyclotomicElement b_num = laurent_eval(nabla_l.numerator(), pt) * CyclotomicElement(Rational(2));
  const CyclotomicElement b_den = laurent_eval(nabla_l.denominator(), pt);
  const CyclotomicElement top = a_num * b_den;
  const CyclotomicElement bottom = a_den * b_num;
  if (top.is_zero() && bottom.is_zero())
    throw InconclusiveError("conway route is inconclusive at (" + omega.to_string() +
                            "): both potentials vanish; use the fox route");
  if (bottom.is_zero()) return SlopeValue::infinity();
  return SlopeValue::finite(-(top / bottom));
}

}  // namespace linkslope
