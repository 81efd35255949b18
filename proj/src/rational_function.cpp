#include "linkslope/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace linkslope {

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(num_.nvars(), Rational(1)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num_.nvars() != den_.nvars()) {
    if (num_.nvars() == 0) num_ = LaurentPoly(den_.nvars(), num_.constant_term());
    else if (den_.nvars() == 0) den_ = LaurentPoly(num_.nvars(), den_.constant_term());
    else throw std::invalid_argument("RationalFunction: variable count mismatch");
  }
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(num_.nvars(), Rational(1));
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_quotient(num_, g);
      den_ = *exact_quotient(den_, g);
    }
  }
  LaurentPoly u = associate_unit(den_);
  num_ *= u;
  den_ *= u;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = LaurentPoly(num_.nvars(), Rational(1));
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = RationalFunction(std::max(nvars(), rhs.nvars()));
    return *this;
  }
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  if (den_.is_constant()) {
    LaurentPoly u = associate_unit(den_);
    num_ *= u;
    den_ *= u;
  } else {
    canonicalize();
  }
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction::inverse: zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

RationalFunction RationalFunction::derivative(std::size_t var) const {
  LaurentPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RationalFunction(n, den_ * den_);
}

RationalFunction RationalFunction::substitute(std::size_t var, const Rational& value) const {
  LaurentPoly d = den_.substitute(var, value);
  if (d.is_zero()) throw std::domain_error("RationalFunction::substitute: pole at the substituted value");
  return RationalFunction(num_.substitute(var, value), d);
}

RationalFunction RationalFunction::invert_variable(std::size_t var) const {
  return RationalFunction(num_.invert_variable(var), den_.invert_variable(var));
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  Exponent shift = num_.min_exponents();
  for (auto& x : shift) x = x < 0 ? -x : 0;
  LaurentPoly n = num_.shifted(shift);
  LaurentPoly d = den_.shifted(shift);
  if (d.is_constant() && d.constant_term() == 1) return n.to_string(names);
  std::string ns = n.to_string(names);
  std::string ds = d.to_string(names);
  const bool den_atomic = ds.find_first_of("*+- ") == std::string::npos;
  return (n.size() > 1 ? "(" + ns + ")" : ns) + "/" + (den_atomic ? ds : "(" + ds + ")");
}

}  // namespace linkslope
