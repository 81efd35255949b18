#include <doctest.h>

#include "linkslope/cyclotomic.hpp"
#include "linkslope/errors.hpp"
#include "linkslope/evaluation.hpp"
#include "linkslope/expression_parser.hpp"
#include "linkslope/fox.hpp"
#include "linkslope/hermitian.hpp"
#include "linkslope/laurent_poly.hpp"
#include "linkslope/linear_algebra.hpp"
#include "linkslope/rational_function.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace linkslope;
using support::random_poly;

namespace {

LaurentPoly poly(const std::string& s, std::size_t nvars = 2) { return parse_laurent(s, nvars); }
CyclotomicElement z(int n, long k = 1) { return CyclotomicElement::zeta(n, k); }
CyclotomicElement q(long a, long b = 1) { return CyclotomicElement(Rational(a, b)); }

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("ring axioms hold on random triples") {
    for (int trial = 0; trial < 40; ++trial) {
      const LaurentPoly a = random_poly(3), b = random_poly(3), c = random_poly(3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("no zero coefficients are stored") {
    LaurentPoly p = poly("t1 + 1") - poly("t1");
    CHECK(p.size() == 1);
    CHECK(p == LaurentPoly(2, Rational(1)));
    const LaurentPoly r = poly("(t1-1)*(t1+1)") - poly("t1^2");
    CHECK(r == LaurentPoly(2, Rational(-1)));
    for (const auto& [e, c] : r.terms()) CHECK(c != 0);
  }

  TEST_CASE("exact division and associates") {
    const LaurentPoly a = poly("(t-1)^2*(t1+2)");
    const LaurentPoly b = poly("t-1");
    auto quotient = exact_quotient(a, b);
    REQUIRE(quotient);
    CHECK(*quotient * b == a);
    CHECK_FALSE(exact_quotient(poly("t1+1"), poly("t1-1")));
    CHECK(are_associates(poly("t^-3*(1-t1)"), poly("t1-1")));
    CHECK(normalize_associate(poly("-2*t^-1*t1 + 2*t^-1")) == poly("t1-1"));
  }

  TEST_CASE("gcd examples") {
    const LaurentPoly g1 = multivariate_gcd(std::vector<LaurentPoly>{poly("t1-1"), LaurentPoly(2)});
    CHECK(are_associates(g1, poly("t1-1")));
    const LaurentPoly g2 = multivariate_gcd(std::vector<LaurentPoly>{poly("(t-1)^2"), poly("(t-1)*(t+1)")});
    CHECK(are_associates(g2, poly("t-1")));
    CHECK(gcd(LaurentPoly(2), LaurentPoly(2)).is_zero());
  }

  TEST_CASE("gcd divides every input and absorbs common factors") {
    for (int trial = 0; trial < 25; ++trial) {
      const LaurentPoly c = random_poly(2, 2, 1, 3);
      if (c.is_zero()) continue;
      const LaurentPoly a = random_poly(2, 3, 1) * c, b = random_poly(2, 3, 1) * c;
      if (a.is_zero() || b.is_zero()) continue;
      const LaurentPoly g = gcd(a, b);
      CHECK(exact_quotient(a, g).has_value());
      CHECK(exact_quotient(b, g).has_value());
      CHECK(exact_quotient(g, normalize_associate(c)).has_value());
    }
  }

  TEST_CASE("gcd normalization: minimal exponents zero, positive leading coefficient") {
    const LaurentPoly g = gcd(poly("-3*t^2*t1^-1*(t+1)"), poly("6*t^-4*(t+1)*(t1-2)"));
    for (std::size_t v = 0; v < 2; ++v) CHECK(g.min_degree(v) == 0);
    CHECK(g.leading_coefficient() > 0);
    CHECK(g == poly("t+1"));
  }

  TEST_CASE("gcd of the Whitehead 2x2 Fox minors divides the order of the whole group") {
    const Presentation p = parse_presentation_json(support::whitehead_json);
    const FoxComplex c = FoxComplex::build(p);
    const auto ms = minors(c.d1, 2);
    std::vector<LaurentPoly> nonzero;
    for (const auto& m : ms)
      if (!m.is_zero()) nonzero.push_back(m);
    REQUIRE_FALSE(nonzero.empty());
    const LaurentPoly g = multivariate_gcd(nonzero);
    for (const auto& m : nonzero) CHECK(exact_quotient(m, g).has_value());
    CHECK(are_associates(g, alexander_order(p, 0)));
  }

  TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = static_cast<std::size_t>(support::uniform(1, 4));
      std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
      for (auto& row : m)
        for (auto& x : row) x = support::uniform(0, 3) ? random_poly(2, 2, 1, 2) : LaurentPoly(2);
      CHECK(determinant(m) == oracle::cofactor_determinant(m, 2));
    }
  }
}

TEST_SUITE("evaluation") {
  TEST_CASE("laurent_eval examples") {
    CHECK(laurent_eval(parse_laurent("t-1", 1), {z(2)}) == q(-2));
    CHECK(laurent_eval(parse_laurent("(1-t)*(1-t^-1)", 1), {z(2)}) == q(4));
    CHECK(laurent_eval(parse_laurent("t^3", 1), {z(3)}) == q(1));
  }

  TEST_CASE("zero coordinate under a negative exponent is a domain error") {
    CHECK_THROWS_AS(laurent_eval(parse_laurent("t^-1", 1), {CyclotomicElement()}), std::domain_error);
    CHECK(laurent_eval(parse_laurent("t^2 + 1", 1), {CyclotomicElement()}) == q(1));
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    for (int trial = 0; trial < 30; ++trial) {
      const LaurentPoly a = random_poly(2), b = random_poly(2);
      const std::vector<CyclotomicElement> pt{z(support::uniform(2, 12), support::uniform(1, 11)), q(support::uniform(1, 5), 3)};
      CHECK(laurent_eval(a * b, pt) == laurent_eval(a, pt) * laurent_eval(b, pt));
      CHECK(laurent_eval(a + b, pt) == laurent_eval(a, pt) + laurent_eval(b, pt));
    }
  }

  TEST_CASE("exact evaluation at roots of unity matches double precision") {
    for (int trial = 0; trial < 30; ++trial) {
      const LaurentPoly a = random_poly(2, 4, 3, 7);
      const int n1 = support::uniform(2, 12), n2 = support::uniform(2, 12);
      const long k1 = support::uniform(0, n1 - 1), k2 = support::uniform(0, n2 - 1);
      const std::complex<double> exact = laurent_eval(a, {z(n1, k1), z(n2, k2)}).to_complex();
      const std::complex<double> numeric =
          laurent_eval(a, std::vector<std::complex<double>>{std::polar(1.0, 2 * M_PI * k1 / n1),
                                                            std::polar(1.0, 2 * M_PI * k2 / n2)});
      CHECK(std::abs(exact - numeric) < 1e-9);
    }
  }
}

TEST_SUITE("cyclotomic") {
  TEST_CASE("powers, conjugation and reduction") {
    CHECK(z(12).pow(12) == q(1));
    CHECK(z(5, 7) == z(5, 2));
    CHECK(z(6).conj() == z(6, 5));
    CHECK(z(3) + z(3, 2) == q(-1));
    CHECK((z(3) + z(3, 2)).reduced().conductor() == 1);
    CHECK((z(4) * z(4)) == q(-1));
    CHECK(z(12, 3) == z(4));
  }

  TEST_CASE("mixed conductors embed into the lcm") {
    const CyclotomicElement s = z(3) + z(4);
    CHECK(std::abs(s.to_complex() - (std::polar(1.0, 2 * M_PI / 3) + std::complex<double>(0, 1))) < 1e-12);
    CHECK(s - z(4) == z(3));
  }

  TEST_CASE("inverse of random nonzero elements") {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = support::uniform(2, 15);
      std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
      for (auto& x : c) x = Rational(support::uniform(-3, 3), support::uniform(1, 3));
      const CyclotomicElement a(n, c);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == q(1));
    }
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
  }
}

TEST_SUITE("rational functions") {
  TEST_CASE("stored in lowest terms") {
    const RationalFunction f(poly("(t1-1)*(t1+1)"), poly("(t1-1)*t1"));
    CHECK(f == RationalFunction(poly("t1+1"), poly("t1")));
    CHECK(are_associates(f.denominator(), poly("t1")));
    CHECK((f - f).is_zero());
    CHECK(f * f.inverse() == RationalFunction(2, Rational(1)));
  }

  TEST_CASE("field operations on random inputs") {
    for (int trial = 0; trial < 15; ++trial) {
      const LaurentPoly a = random_poly(2, 2, 1), b = random_poly(2, 2, 1), c = random_poly(2, 2, 1);
      if (b.is_zero() || c.is_zero()) continue;
      const RationalFunction x(a, b), y(b, c);
      CHECK((x + y) - y == x);
      CHECK((x * y) / y == x);
    }
  }

  TEST_CASE("parser accepts implicit products and negative powers") {
    const RationalFunction f = parse_rational_function("(1-t1)(1-t1^-1)", 2);
    CHECK(f == RationalFunction(poly("-t1 + 2 - t1^-1")));
    CHECK(parse_rational_function("1/(s1-s1^-1)", 2, VariableFamily::S) ==
          RationalFunction(poly("t1"), poly("t1^2 - 1")));
    CHECK(parse_rational_function("3*t1^2*t2^-1 - 1/2", 3) ==
          RationalFunction(parse_laurent("3*t1^2*t2^-1", 3) - LaurentPoly(3, Rational(1, 2))));
    CHECK_THROWS_AS(parse_rational_function("t3", 2), ParseError);
    CHECK_THROWS_AS(parse_rational_function("(t1", 2), ParseError);
    CHECK_THROWS_AS(parse_rational_function("1/(t1-t1)", 2), std::exception);
  }
}

TEST_SUITE("linear algebra") {
  TEST_CASE("identity and zero systems") {
    Matrix<Rational> id(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    const std::vector<Rational> b{Rational(1), Rational(-2), Rational(5, 3)};
    const auto s = solve_linear(id, b, Rational(0));
    CHECK(s.in_image);
    CHECK(s.solution == b);
    CHECK(s.kernel.empty());

    const Matrix<Rational> zero(2, 2, Rational(0));
    const auto t = solve_linear(zero, {Rational(1), Rational(0)}, Rational(0));
    CHECK_FALSE(t.in_image);
    CHECK(t.kernel.size() == 2);
  }

  TEST_CASE("twist family 2x2 solution by hand elimination") {
    // A = [[1-w, -w], [1, w-1]], b = (1, 0): alpha = (w-1, -1) / (-w^2 + 3w - 1).
    const RationalFunction w(LaurentPoly::variable(2, 1));
    const RationalFunction one(2, Rational(1));
    Matrix<RationalFunction> a(2, 2, RationalFunction(2));
    a(0, 0) = one - w;
    a(0, 1) = -w;
    a(1, 0) = one;
    a(1, 1) = w - one;
    const auto s = solve_linear(a, {one, RationalFunction(2)}, RationalFunction(2));
    REQUIRE(s.in_image);
    const RationalFunction det = -(w * w) + RationalFunction(2, Rational(3)) * w - one;
    CHECK(s.solution[0] == (w - one) / det);
    CHECK(s.solution[1] == -one / det);
  }

  TEST_CASE("solutions and kernels are exact on random cyclotomic systems") {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t r = static_cast<std::size_t>(support::uniform(1, 4));
      const std::size_t c = static_cast<std::size_t>(support::uniform(1, 4));
      Matrix<CyclotomicElement> m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          m(i, j) = support::uniform(0, 2) ? z(6, support::uniform(0, 5)) * q(support::uniform(-2, 2)) : CyclotomicElement();
      std::vector<CyclotomicElement> x(c);
      for (auto& v : x) v = z(3, support::uniform(0, 2)) + q(support::uniform(-2, 2));
      const std::vector<CyclotomicElement> b = m * x;
      const auto s = solve_linear(m, b, CyclotomicElement());
      REQUIRE(s.in_image);
      CHECK(m * s.solution == b);
      for (const auto& k : s.kernel) CHECK(is_zero_vector(m * k));
      CHECK(s.kernel.size() + rank(m) == c);
    }
  }
}

TEST_SUITE("hermitian") {
  TEST_CASE("signature examples") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -1;
    CHECK(hermitian_signature(d) == SignatureNullity{0, 0});
    CHECK(hermitian_signature(Eigen::MatrixXcd::Zero(3, 3)) == SignatureNullity{0, 3});
  }

  TEST_CASE("non-Hermitian input is refused") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1;
    CHECK_THROWS_AS(hermitian_signature(m), PreconditionError);
  }

  TEST_CASE("eigenvalues agree with the Jacobi oracle on random Hermitian matrices") {
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
      const int n = support::uniform(1, 5);
      std::vector<std::vector<std::complex<double>>> h(n, std::vector<std::complex<double>>(n));
      for (int i = 0; i < n; ++i) {
        h[i][i] = g(support::rng());
        for (int j = i + 1; j < n; ++j) {
          h[i][j] = {g(support::rng()), g(support::rng())};
          h[j][i] = std::conj(h[i][j]);
        }
      }
      Eigen::MatrixXcd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = h[i][j];
      const auto ours = hermitian_eigenvalues(m);
      const auto ref = oracle::jacobi_hermitian_eigenvalues(h);
      REQUIRE(ours.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-8);
      CHECK(hermitian_signature(m).signature == oracle::signature_from_eigenvalues(ref));
    }
  }
}
