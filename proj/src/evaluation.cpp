#include "linkslope/evaluation.hpp"

#include <map>
#include <stdexcept>

#include "linkslope/slope_value.hpp"

namespace linkslope {

namespace {

template <class F, class Pow>
F evaluate(const LaurentPoly& p, const std::vector<F>& point, const F& zero, const F& one, Pow power) {
  if (point.size() != p.nvars()) throw std::invalid_argument("laurent_eval: point has the wrong number of coordinates");
  std::map<std::pair<std::size_t, int>, F> cache;
  F total = zero;
  for (const auto& [e, c] : p.terms()) {
    F term = one;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      auto key = std::make_pair(v, e[v]);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, power(point[v], e[v])).first;
      term *= it->second;
    }
    total += term * F(c.get_d());
  }
  return total;
}

}  // namespace

CyclotomicElement laurent_eval(const LaurentPoly& p, const std::vector<CyclotomicElement>& point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("laurent_eval: point has the wrong number of coordinates");
  std::map<std::pair<std::size_t, int>, CyclotomicElement> cache;
  CyclotomicElement total;
  for (const auto& [e, c] : p.terms()) {
    CyclotomicElement term(c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      auto key = std::make_pair(v, e[v]);
      auto it = cache.find(key);
      if (it == cache.end()) {
        if (e[v] < 0 && point[v].is_zero())
          throw std::domain_error("laurent_eval: zero coordinate under a negative exponent");
        it = cache.emplace(key, point[v].pow(e[v])).first;
      }
      term *= it->second;
    }
    total += term;
  }
  return total;
}

std::complex<double> laurent_eval(const LaurentPoly& p, const std::vector<std::complex<double>>& point) {
  return evaluate<std::complex<double>>(p, point, 0.0, 1.0, [](const std::complex<double>& z, int e) {
    if (e < 0 && std::abs(z) == 0.0) throw std::domain_error("laurent_eval: zero coordinate under a negative exponent");
    return std::pow(z, e);
  });
}

CyclotomicElement rational_eval(const RationalFunction& f, const std::vector<CyclotomicElement>& point) {
  CyclotomicElement d = laurent_eval(f.denominator(), point);
  if (d.is_zero()) throw std::domain_error("rational_eval: pole");
  return laurent_eval(f.numerator(), point) / d;
}

LaurentPoly set_variable_to_one(const LaurentPoly& p, std::size_t var) { return p.substitute(var, Rational(1)); }

SlopeValue SlopeValue::finite(Value v) {
  SlopeValue s;
  s.kind_ = Kind::Finite;
  s.value_ = std::move(v);
  return s;
}

SlopeValue SlopeValue::infinity() {
  SlopeValue s;
  s.kind_ = Kind::Infinity;
  return s;
}

SlopeValue SlopeValue::undefined(int kernel_dim) {
  SlopeValue s;
  s.kind_ = Kind::Undefined;
  s.kernel_dim_ = kernel_dim;
  return s;
}

std::string SlopeValue::to_string(std::span<const std::string> names) const {
  switch (kind_) {
    case Kind::Infinity:
      return "inf";
    case Kind::Undefined:
      return "undefined(dim=" + std::to_string(kernel_dim_) + ")";
    case Kind::Finite:
      break;
  }
  if (is_exact()) return exact().reduced().to_string();
  if (is_symbolic()) return symbolic().to_string(names);
  const auto& z = numeric();
  std::string s = std::to_string(z.real());
  if (std::abs(z.imag()) > 1e-12) s += (z.imag() < 0 ? " - " : " + ") + std::to_string(std::abs(z.imag())) + "i";
  return s;
}

std::complex<double> SlopeValue::approximate() const {
  if (!is_finite()) throw std::logic_error("SlopeValue::approximate: not finite");
  if (is_exact()) return exact().to_complex();
  if (is_numeric()) return numeric();
  throw std::logic_error("SlopeValue::approximate: symbolic value");
}

bool operator==(const SlopeValue& a, const SlopeValue& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == SlopeValue::Kind::Infinity) return true;
  if (a.kind_ == SlopeValue::Kind::Undefined) return a.kernel_dim_ == b.kernel_dim_;
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  if (a.is_symbolic() && b.is_symbolic()) return a.symbolic() == b.symbolic();
  if (a.is_symbolic() || b.is_symbolic()) return false;
  return std::abs(a.approximate() - b.approximate()) <= 1e-9;
}

}  // namespace linkslope
