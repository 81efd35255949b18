#include "linkslope/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linkslope {

LaurentPoly::LaurentPoly(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) {
    Rational c = constant;
    c.canonicalize();
    terms_.emplace(Exponent(nvars, 0), std::move(c));
  }
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& coeff) {
  LaurentPoly p(e.size());
  if (coeff != 0) p.add_term(e, coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw std::out_of_range("LaurentPoly::variable: index out of range");
  Exponent e(nvars, 0);
  e[index] = power;
  return monomial(e);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

int LaurentPoly::degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int LaurentPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

bool LaurentPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != nvars_) throw std::invalid_argument("LaurentPoly::add_term: exponent length mismatch");
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& rhs) {
  if (nvars_ == rhs.nvars_) return;
  // Variable-free constants promote into any ring.
  if (nvars_ == 0 && is_constant()) {
    Rational c = constant_term();
    *this = LaurentPoly(rhs.nvars_, c);
    return;
  }
  if (rhs.nvars_ == 0) return;
  throw std::invalid_argument("LaurentPoly: variable count mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  if (rhs.nvars_ != nvars_) {
    add_term(Exponent(nvars_, 0), rhs.constant_term());
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_compatible(rhs);
  if (rhs.nvars_ != nvars_) {
    add_term(Exponent(nvars_, 0), -rhs.constant_term());
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) {
    if (a.nvars_ == 0 && a.is_constant()) return b * a.constant_term();
    if (b.nvars_ == 0 && b.is_constant()) return a * b.constant_term();
    throw std::invalid_argument("LaurentPoly: variable count mismatch");
  }
  LaurentPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) {
    // A ring-less constant equals a constant of any ring.
    if ((a.nvars_ == 0 || b.nvars_ == 0) && a.is_constant() && b.is_constant())
      return a.constant_term() == b.constant_term();
    return false;
  }
  return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (!is_monomial()) throw std::domain_error("LaurentPoly::pow: negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i] * (-n);
    Rational cn = 1;
    for (int k = 0; k < -n; ++k) cn /= c;
    return monomial(ne, cn);
  }
  LaurentPoly result(nvars_, Rational(1));
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& by) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    for (std::size_t i = 0; i < nvars_; ++i) ne[i] += by[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(ne), c);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(std::size_t var, const Rational& value) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational f = 1;
    int k = e[var];
    if (k != 0 && value == 0) throw std::domain_error("LaurentPoly::substitute: zero at a variable in use");
    for (int j = 0; j < (k < 0 ? -k : k); ++j) f *= value;
    if (k < 0) f = 1 / f;
    Exponent ne = e;
    ne[var] = 0;
    r.add_term(ne, c * f);
  }
  return r;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent ne = e;
    ne[var] -= 1;
    r.add_term(ne, c * e[var]);
  }
  return r;
}

LaurentPoly LaurentPoly::invert_variable(std::size_t var) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[var] = -ne[var];
    r.add_term(ne, c);
  }
  return r;
}

LaurentPoly LaurentPoly::with_nvars(std::size_t nvars) const {
  LaurentPoly r(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i < nvars) {
        ne[i] = e[i];
      } else if (e[i] != 0) {
        throw std::invalid_argument("LaurentPoly::with_nvars: dropping a variable in use");
      }
    }
    r.add_term(ne, c);
  }
  return r;
}

namespace {

std::string monomial_string(const Exponent& e, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest lex term first reads like a conventional polynomial.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(e, names);
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << a.get_str();
    } else if (a == 1) {
      out << mono;
    } else {
      out << a.get_str() << "*" << mono;
    }
  }
  return out.str();
}

std::vector<std::string> t_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(i == 0 ? "t" : "t" + std::to_string(i));
  return names;
}

std::vector<std::string> s_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(i == 0 ? "s" : "s" + std::to_string(i));
  return names;
}

}  // namespace linkslope
