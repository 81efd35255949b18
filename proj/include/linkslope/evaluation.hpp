#pragma once

#include <complex>
#include <vector>

#include "linkslope/cyclotomic.hpp"
#include "linkslope/laurent_poly.hpp"
#include "linkslope/rational_function.hpp"

namespace linkslope {

/// Exact value of p at a point; throws std::domain_error when a coordinate
/// is zero and the variable occurs with a negative exponent.
CyclotomicElement laurent_eval(const LaurentPoly& p, const std::vector<CyclotomicElement>& point);
std::complex<double> laurent_eval(const LaurentPoly& p, const std::vector<std::complex<double>>& point);

/// Rational function at a point; throws std::domain_error at a pole.
CyclotomicElement rational_eval(const RationalFunction& f, const std::vector<CyclotomicElement>& point);

/// Substitutes 1 for one variable.
LaurentPoly set_variable_to_one(const LaurentPoly& p, std::size_t var);

}  // namespace linkslope
