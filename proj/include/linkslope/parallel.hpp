#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkslope/characters.hpp"
#include "linkslope/laurent_poly.hpp"
#include "linkslope/presentation.hpp"
#include "linkslope/slope_value.hpp"

namespace linkslope {

/// Result of one character in a batch: a value, or the message of the
/// precondition that failed (an inadmissible character, say).
struct SlopeOutcome {
  std::optional<SlopeValue> value;
  std::string error;
  friend bool operator==(const SlopeOutcome&, const SlopeOutcome&) = default;
};

/// Fox-route slopes for a list of characters, one OpenMP task per character.
/// Output order matches input order.
std::vector<SlopeOutcome> evaluate_slopes(const Presentation& p, std::span<const Character> omegas);
/// Reference loop with identical semantics.
std::vector<SlopeOutcome> evaluate_slopes_serial(const Presentation& p, std::span<const Character> omegas);

/// alexander_order with the minors computed concurrently.
LaurentPoly alexander_order_parallel(const Presentation& p, int r);

/// Worker threads OpenMP would use (1 in a build without OpenMP).
int parallel_threads();

}  // namespace linkslope
