#include <doctest.h>

#include <set>

#include "linkslope/errors.hpp"
#include "linkslope/splice.hpp"
#include "support.hpp"

using namespace linkslope;

namespace {

ExtendedReal r(long a, long b = 1) { return ExtendedReal(make_rational(a, b)); }
const ExtendedReal kInf = ExtendedReal::infinity();

// p and p/2 for |p| <= 24, plus -1/3, 1/3 and the three infinities.
std::vector<ExtendedReal> grid() {
  std::vector<ExtendedReal> out{kInf, ExtendedReal::plus_infinity(), ExtendedReal::minus_infinity()};
  for (long p = -24; p <= 24; ++p)
    for (long q = 1; q <= 2; ++q) out.push_back(r(p, q));
  out.push_back(r(1, 3));
  out.push_back(r(-1, 3));
  return out;
}

SpliceSide side(int signature, int nullity, std::vector<int> lambda, const std::string& omega) {
  return SpliceSide{signature, nullity, std::move(lambda), parse_character(omega)};
}

}  // namespace

TEST_SUITE("splice") {
  TEST_CASE("sg") {
    CHECK(sg(r(0)) == 0);
    CHECK(sg(kInf) == 0);
    CHECK(sg(r(-3, 2)) == -1);
    CHECK(sg(r(7)) == 1);
    CHECK(sg(ExtendedReal(-0.25)) == -1);
    CHECK(sg(ExtendedReal::plus_infinity()) == 1);
    CHECK(sg(ExtendedReal::minus_infinity()) == -1);
  }

  TEST_CASE("extended arithmetic") {
    CHECK(r(0).reciprocal() == kInf);
    CHECK(kInf.reciprocal() == r(0));
    CHECK(r(-2).reciprocal() == r(-1, 2));
    CHECK((kInf - kInf) == r(0));
    CHECK((kInf - r(5)) == kInf);
    CHECK((r(5) - kInf) == ExtendedReal::minus_infinity());
    CHECK(parse_extended_real("inf") == kInf);
    CHECK(parse_extended_real("-inf") == ExtendedReal::minus_infinity());
    CHECK(parse_extended_real("-3/4") == r(-3, 4));
    CHECK(parse_extended_real("0.5").approximate() == doctest::Approx(0.5));
    CHECK_THROWS_AS(parse_extended_real("abc"), ParseError);
  }

  TEST_CASE("delta sigma examples") {
    CHECK(delta_sigma(r(0), r(0)) == 0);
    CHECK(delta_sigma(kInf, kInf) == 1);
    CHECK(delta_sigma(r(1), r(1)) == 1);
  }

  TEST_CASE("zero first slope contributes nothing") {
    for (const auto& x : grid())
      if (x.is_finite()) CHECK(delta_sigma(r(0), x) == 0);
  }

  TEST_CASE("range over ten thousand pairs") {
    std::vector<ExtendedReal> values{kInf};
    for (long p = -49; p <= 49; ++p) values.push_back(r(p, 7));
    REQUIRE(values.size() * values.size() >= 10000);
    std::set<int> seen;
    for (const auto& a : values)
      for (const auto& b : values) {
        const int d = delta_sigma(a, b);
        CHECK(d >= -2);
        CHECK(d <= 2);
        seen.insert(d);
      }
    for (const auto& a : grid())
      for (const auto& b : grid()) {
        const int d = delta_sigma(a, b);
        CHECK((d >= -2 && d <= 2));
      }
    CHECK(seen.count(2) + seen.count(-2) > 0);
  }

  TEST_CASE("mirror anti-symmetry off the degenerate set") {
    for (const auto& a : grid())
      for (const auto& b : grid()) {
        if (!a.is_finite() || !b.is_finite()) continue;
        CHECK(delta_sigma(-a, -b) == -delta_sigma(a, b));
      }
  }

  TEST_CASE("hyperbola regions") {
    CHECK(hyperbola_region(r(1), r(1)) == HyperbolaRegion::On);
    CHECK(hyperbola_region(r(2), r(1, 2)) == HyperbolaRegion::On);
    CHECK(hyperbola_region(r(2), r(2)) == HyperbolaRegion::Above);
    CHECK(hyperbola_region(r(0), r(0)) == HyperbolaRegion::Below);
    CHECK(hyperbola_region(r(-1), r(3)) == HyperbolaRegion::Below);
    CHECK(hyperbola_region(kInf, r(0)) == HyperbolaRegion::AtInfinity);
  }

  TEST_CASE("generic splice") {
    const SpliceResult a = splice_sigma_generic(side(2, 1, {1, 1}, "zeta(3)^2, zeta(3)^2"),
                                                side(-1, 2, {1, 1}, "zeta(3), zeta(3)"));
    CHECK(a.signature == 0);
    CHECK(a.nullity == 3);
    const SpliceResult b = splice_sigma_generic(side(3, 0, {1}, "zeta(3)"), side(-1, 4, {1, 1}, "zeta(3), zeta(3)"));
    CHECK(b.signature == 2);
    CHECK(b.nullity == 4);
    CHECK_THROWS_AS(splice_sigma_generic(side(0, 0, {0}, "-1"), side(0, 0, {0}, "zeta(5)")), PreconditionError);
  }

  TEST_CASE("admissible splice assembly") {
    const AdmissibleSpliceResult a = splice_sigma_admissible(1, -2, 1, 0, Integer(1), Integer(-1), r(0), r(0));
    CHECK(a.delta_sigma == 0);
    CHECK(a.signature == 1 - 2 - 1);
    CHECK(a.nullity_without_correction == 1);
    CHECK(a.region == HyperbolaRegion::Below);
    const AdmissibleSpliceResult b = splice_sigma_admissible(0, 0, 0, 0, Integer(0), Integer(0), kInf, kInf);
    CHECK(b.signature == 1);
    CHECK(b.region == HyperbolaRegion::AtInfinity);
    for (const auto& x : grid())
      for (const auto& y : grid()) {
        const AdmissibleSpliceResult c = splice_sigma_admissible(2, 3, 0, 0, Integer(2), Integer(1), x, y);
        CHECK(c.signature == 2 + 3 + 2 + delta_sigma(x, y));
      }
  }

  TEST_CASE("converting slopes") {
    CHECK(to_extended_real(SlopeValue::infinity()) == kInf);
    CHECK(to_extended_real(SlopeValue::finite(CyclotomicElement(Rational(2, 3)))) == r(2, 3));
    CHECK_THROWS_AS(to_extended_real(SlopeValue::undefined(2)), PreconditionError);
    CHECK_THROWS_AS(to_extended_real(SlopeValue::finite(CyclotomicElement::zeta(4))), PreconditionError);
  }
}
