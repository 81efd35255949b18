#pragma once

#include <complex>
#include <span>
#include <string>
#include <variant>

#include "linkslope/cyclotomic.hpp"
#include "linkslope/rational_function.hpp"

namespace linkslope {

/// Value of the slope at a character: a finite field element, the point at
/// infinity, or undefined together with the observed kernel dimension.
class SlopeValue {
 public:
  enum class Kind { Finite, Infinity, Undefined };
  using Value = std::variant<std::monostate, CyclotomicElement, RationalFunction, std::complex<double>>;

  static SlopeValue finite(Value v);
  static SlopeValue infinity();
  static SlopeValue undefined(int kernel_dim);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_undefined() const { return kind_ == Kind::Undefined; }
  int kernel_dim() const { return kernel_dim_; }
  const Value& value() const { return value_; }
  const CyclotomicElement& exact() const { return std::get<CyclotomicElement>(value_); }
  const RationalFunction& symbolic() const { return std::get<RationalFunction>(value_); }
  const std::complex<double>& numeric() const { return std::get<std::complex<double>>(value_); }
  bool is_exact() const { return std::holds_alternative<CyclotomicElement>(value_); }
  bool is_symbolic() const { return std::holds_alternative<RationalFunction>(value_); }
  bool is_numeric() const { return std::holds_alternative<std::complex<double>>(value_); }

  /// `inf`, `undefined(dim=2)`, a cyclotomic or rational-function string, or a complex number.
  std::string to_string(std::span<const std::string> names = {}) const;
  /// Complex approximation of a finite value.
  std::complex<double> approximate() const;

  /// Exact equality; numeric values compare within 1e-9.
  friend bool operator==(const SlopeValue& a, const SlopeValue& b);

 private:
  Kind kind_ = Kind::Undefined;
  int kernel_dim_ = 0;
  Value value_;
};

}  // namespace linkslope
