#include "linkslope/characters.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <regex>
#include <sstream>

#include "linkslope/errors.hpp"

namespace linkslope {

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

// Splits on commas at parenthesis depth zero.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::complex<double> parse_complex(const std::string& s) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex pure_imag(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, pure_imag)) {
    double im = m[2].matched ? std::stod(m[2].str()) : 1.0;
    if (m[1].str() == "-") im = -im;
    return {0.0, im};
  }
  if (std::regex_match(s, m, re) && (m[1].matched || m[2].matched)) {
    double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
    return {re_part, im};
  }
  throw ParseError("character: cannot read coordinate '" + s + "'");
}

bool exactly_one(const CyclotomicElement& x) { return x == CyclotomicElement(Rational(1)); }

}  // namespace

Character Character::root_of_unity(int n, std::vector<long> exponents) {
  if (n < 1) throw PreconditionError("character: conductor must be positive");
  long g = n;
  for (auto& k : exponents) {
    k = mod(k, n);
    g = std::gcd(g, k);
  }
  Character c;
  c.kind_ = Kind::RootOfUnity;
  c.size_ = exponents.size();
  c.conductor_ = static_cast<int>(n / g);
  for (auto& k : exponents) k /= g;
  c.exponents_ = std::move(exponents);
  return c;
}

Character Character::field_point(std::vector<CyclotomicElement> values) {
  for (const auto& v : values)
    if (v.is_zero()) throw PreconditionError("character: coordinates must be nonzero");
  Character c;
  c.kind_ = Kind::FieldPoint;
  c.size_ = values.size();
  c.values_ = std::move(values);
  return c;
}

Character Character::numeric(std::vector<std::complex<double>> values) {
  for (const auto& v : values)
    if (std::abs(v) == 0.0) throw PreconditionError("character: coordinates must be nonzero");
  Character c;
  c.kind_ = Kind::Numeric;
  c.size_ = values.size();
  c.numeric_ = std::move(values);
  return c;
}

Character Character::symbolic(std::size_t mu) {
  Character c;
  c.kind_ = Kind::Symbolic;
  c.size_ = mu;
  return c;
}

bool Character::is_unitary() const {
  switch (kind_) {
    case Kind::RootOfUnity:
      return true;
    case Kind::FieldPoint:
      for (const auto& v : values_)
        if (!exactly_one(v * v.conj())) return false;
      return true;
    case Kind::Numeric:
      for (const auto& v : numeric_)
        if (std::abs(std::abs(v) - 1.0) > 1e-9) return false;
      return true;
    case Kind::Symbolic:
      return false;
  }
  return false;
}

int Character::order(std::size_t i) const {
  if (kind_ != Kind::RootOfUnity) throw PreconditionError("character: order needs a root-of-unity character");
  return static_cast<int>(conductor_ / std::gcd(static_cast<long>(conductor_), exponents_.at(i)));
}

Rational Character::log(std::size_t i) const {
  if (kind_ != Kind::RootOfUnity) throw PreconditionError("character: Log needs a root-of-unity character");
  return make_rational(exponents_.at(i), conductor_);
}

std::vector<CyclotomicElement> Character::exact_values() const {
  if (kind_ == Kind::FieldPoint) return values_;
  if (kind_ != Kind::RootOfUnity) throw PreconditionError("character: exact values need an exact character");
  std::vector<CyclotomicElement> v;
  for (long k : exponents_) v.push_back(CyclotomicElement::zeta(conductor_, k));
  return v;
}

std::vector<std::complex<double>> Character::numeric_values() const {
  if (kind_ == Kind::Numeric) return numeric_;
  if (kind_ == Kind::Symbolic) throw PreconditionError("character: a symbolic character has no numeric value");
  std::vector<std::complex<double>> v;
  for (const auto& x : exact_values()) v.push_back(x.to_complex());
  return v;
}

bool Character::coordinate_is_one(std::size_t i) const {
  switch (kind_) {
    case Kind::RootOfUnity:
      return exponents_.at(i) == 0;
    case Kind::FieldPoint:
      return exactly_one(values_.at(i));
    case Kind::Numeric:
      return std::abs(numeric_.at(i) - 1.0) <= 1e-9;
    case Kind::Symbolic:
      return false;
  }
  return false;
}

Character Character::inverse() const {
  switch (kind_) {
    case Kind::RootOfUnity: {
      std::vector<long> k = exponents_;
      for (auto& x : k) x = -x;
      return root_of_unity(conductor_, k);
    }
    case Kind::FieldPoint: {
      std::vector<CyclotomicElement> v;
      for (const auto& x : values_) v.push_back(x.inverse());
      return field_point(v);
    }
    case Kind::Numeric: {
      std::vector<std::complex<double>> v;
      for (const auto& x : numeric_) v.push_back(1.0 / x);
      return numeric(v);
    }
    case Kind::Symbolic:
      throw PreconditionError("character: cannot invert a symbolic character");
  }
  return *this;
}

Character Character::without(std::size_t i) const {
  if (i >= size_) throw PreconditionError("character: coordinate out of range");
  switch (kind_) {
    case Kind::RootOfUnity: {
      std::vector<long> k = exponents_;
      k.erase(k.begin() + static_cast<std::ptrdiff_t>(i));
      return root_of_unity(conductor_, k);
    }
    case Kind::FieldPoint: {
      std::vector<CyclotomicElement> v = values_;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      return field_point(v);
    }
    case Kind::Numeric: {
      std::vector<std::complex<double>> v = numeric_;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      return numeric(v);
    }
    case Kind::Symbolic:
      return symbolic(size_ - 1);
  }
  return *this;
}

std::string Character::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out << ", ";
    switch (kind_) {
      case Kind::RootOfUnity: {
        const long k = exponents_[i];
        if (k == 0) out << "1";
        else if (2 * k == conductor_) out << "-1";
        else {
          out << "zeta(" << conductor_ << ")";
          if (k != 1) out << "^" << k;
        }
        break;
      }
      case Kind::FieldPoint:
        out << values_[i].to_string();
        break;
      case Kind::Numeric: {
        const auto& z = numeric_[i];
        out << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
        break;
      }
      case Kind::Symbolic:
        out << "t" << (i + 1);
        break;
    }
  }
  return out.str();
}

bool operator==(const Character& a, const Character& b) {
  if (a.kind_ != b.kind_ || a.size_ != b.size_) return false;
  switch (a.kind_) {
    case Character::Kind::RootOfUnity:
      return a.conductor_ == b.conductor_ && a.exponents_ == b.exponents_;
    case Character::Kind::FieldPoint:
      return a.values_ == b.values_;
    case Character::Kind::Numeric:
      return a.numeric_ == b.numeric_;
    case Character::Kind::Symbolic:
      return true;
  }
  return false;
}

Character parse_character(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ParseError("character: empty literal");
  // Strip one pair of enclosing parentheses around the whole tuple.
  if (text.front() == '(' && text.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      else if (text[i] == ')') --depth;
      if (depth == 0 && i + 1 < text.size()) encloses = false;
    }
    if (encloses) text = trim(std::string_view(text).substr(1, text.size() - 2));
  }
  std::vector<std::string> coords = split_top(text, ',');
  static const std::regex zeta_re(R"(^zeta\s*\(\s*(\d+)\s*\)(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?$)");
  static const std::regex rational_re(R"(^([+-]?\d+)(?:\s*/\s*(\d+))?$)");
  static const std::regex symbol_re(R"(^t(\d+)$)");

  enum class Form { Root, Rational, Numeric, Symbol };
  std::vector<Form> forms;
  std::vector<std::pair<long, long>> roots;
  std::vector<Rational> rationals;
  std::vector<std::complex<double>> numerics;
  std::vector<long> symbols;
  for (const auto& c : coords) {
    std::smatch m;
    if (c.empty()) throw ParseError("character: empty coordinate");
    if (std::regex_match(c, m, zeta_re)) {
      long n = std::stol(m[1].str());
      if (n < 1) throw ParseError("character: zeta order must be positive");
      long k = m[2].matched ? std::stol(m[2].str()) : 1;
      forms.push_back(Form::Root);
      roots.push_back({n, k});
    } else if (std::regex_match(c, m, rational_re)) {
      Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
      Integer den(m[2].matched ? m[2].str() : "1");
      if (den == 0) throw ParseError("character: zero denominator");
      Rational q(num, den);
      q.canonicalize();
      if (q == 0) throw ParseError("character: coordinates must be nonzero");
      forms.push_back(Form::Rational);
      rationals.push_back(q);
    } else if (std::regex_match(c, m, symbol_re)) {
      forms.push_back(Form::Symbol);
      symbols.push_back(std::stol(m[1].str()));
    } else {
      std::string inner = c;
      if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
      forms.push_back(Form::Numeric);
      numerics.push_back(parse_complex(inner));
    }
  }

  const std::size_t mu = coords.size();
  std::size_t n_symbol = 0, n_numeric = 0;
  for (auto f : forms) {
    if (f == Form::Symbol) ++n_symbol;
    if (f == Form::Numeric) ++n_numeric;
  }
  if (n_symbol) {
    if (n_symbol != mu) throw ParseError("character: symbolic coordinates cannot be mixed with values");
    for (std::size_t i = 0; i < mu; ++i)
      if (symbols[i] != static_cast<long>(i + 1)) throw ParseError("character: symbolic form must read t1,t2,...");
    return Character::symbolic(mu);
  }

  // Values in input order.
  std::vector<CyclotomicElement> exact;
  std::vector<std::complex<double>> approx;
  bool all_roots = true;
  long lcm = 1;
  std::size_t ir = 0, iq = 0, in = 0;
  std::vector<std::pair<long, long>> as_roots;
  for (auto f : forms) {
    switch (f) {
      case Form::Root: {
        auto [n, k] = roots[ir++];
        as_roots.push_back({n, k});
        lcm = std::lcm(lcm, n);
        CyclotomicElement z = CyclotomicElement::zeta(static_cast<int>(n), k);
        exact.push_back(z);
        approx.push_back(z.to_complex());
        break;
      }
      case Form::Rational: {
        Rational q = rationals[iq++];
        if (q == 1) as_roots.push_back({1, 0});
        else if (q == -1) {
          as_roots.push_back({2, 1});
          lcm = std::lcm(lcm, 2L);
        } else all_roots = false;
        exact.emplace_back(q);
        approx.push_back(q.get_d());
        break;
      }
      case Form::Numeric:
        all_roots = false;
        approx.push_back(numerics[in++]);
        break;
      case Form::Symbol:
        break;
    }
  }
  if (n_numeric) return Character::numeric(approx);
  if (all_roots) {
    std::vector<long> ks;
    for (auto [n, k] : as_roots) ks.push_back(k * (lcm / n));
    return Character::root_of_unity(static_cast<int>(lcm), ks);
  }
  return Character::field_point(exact);
}

std::vector<Character> parse_character_list(std::string_view text) {
  std::vector<Character> out;
  for (const auto& part : split_top(text, ';'))
    if (!part.empty()) out.push_back(parse_character(part));
  if (out.empty()) throw ParseError("character list is empty");
  return out;
}

bool is_admissible(const std::vector<int>& lambda, const Character& omega) {
  if (lambda.size() != omega.size())
    throw PreconditionError("is_admissible: the character has " + std::to_string(omega.size()) +
                            " coordinates but the linking vector has " + std::to_string(lambda.size()));
  switch (omega.kind()) {
    case Character::Kind::RootOfUnity: {
      long s = 0;
      for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * omega.exponents()[i];
      return mod(s, omega.conductor()) == 0;
    }
    case Character::Kind::FieldPoint: {
      CyclotomicElement p(Rational(1));
      auto v = omega.exact_values();
      for (std::size_t i = 0; i < lambda.size(); ++i) p *= v[i].pow(lambda[i]);
      return exactly_one(p);
    }
    case Character::Kind::Numeric: {
      std::complex<double> p = 1.0;
      auto v = omega.numeric_values();
      for (std::size_t i = 0; i < lambda.size(); ++i) p *= std::pow(v[i], lambda[i]);
      return std::abs(p - 1.0) <= 1e-9;
    }
    case Character::Kind::Symbolic:
      for (int l : lambda)
        if (l != 0) return false;
      return true;
  }
  return false;
}

bool is_prime_power(long n) {
  if (n < 1) return false;
  if (n == 1) return true;
  long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

AdmissibleVariety admissible_components(const std::vector<int>& lambda) {
  AdmissibleVariety v;
  v.lambda = lambda;
  long g = 0;
  for (int l : lambda) g = std::gcd(g, static_cast<long>(std::abs(l)));
  if (g == 0) {
    v.full_torus = true;
    return v;
  }
  v.N = static_cast<int>(g);
  for (int l : lambda) v.nu.push_back(static_cast<int>(l / g));
  for (int d = 1; d <= v.N; ++d)
    if (v.N % d == 0) v.components.push_back({d, is_prime_power(d)});
  return v;
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes:
      return "yes";
    case Tristate::No:
      return "no";
    case Tristate::Unknown:
      return "unknown";
  }
  return "unknown";
}

Tristate is_concordance_root(const Character& omega) {
  if (omega.kind() != Character::Kind::RootOfUnity)
    throw PreconditionError("is_concordance_root: needs an exact root-of-unity character");
  // A coordinate of non-prime-power order m is a zero of Phi_m(t_i), and Phi_m(1) = 1.
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (!is_prime_power(omega.order(i))) return Tristate::Yes;
  // All coordinates in Q(zeta_{p^k}): p(omega) = p(1) = +-1 modulo the prime over p.
  if (is_prime_power(omega.conductor())) return Tristate::No;
  return Tristate::Unknown;
}

Integer ind(const Rational& x) { return floor(x) - floor(Rational(-x)); }

Integer defect(const std::vector<int>& lambda, const Character& omega) {
  if (omega.kind() != Character::Kind::RootOfUnity)
    throw PreconditionError("defect: needs an exact root-of-unity character");
  if (lambda.size() != omega.size()) throw PreconditionError("defect: linking vector and character sizes differ");
  Rational total = 0;
  Integer separate = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    total += lambda[i] * omega.log(i);
    separate += lambda[i] * ind(omega.log(i));
  }
  return ind(total) - separate;
}

std::vector<Character> enumerate_unitary_admissible(const std::vector<int>& lambda, int max_order) {
  if (max_order < 2) throw PreconditionError("enumerate_unitary_admissible: max_order must be at least 2");
  const std::size_t mu = lambda.size();
  std::vector<Character> out;
  if (mu == 0) return out;
  for (int n = 2; n <= max_order; ++n) {
    std::vector<long> k(mu, 1);
    while (true) {
      long g = n, s = 0;
      for (std::size_t i = 0; i < mu; ++i) {
        g = std::gcd(g, k[i]);
        s += lambda[i] * k[i];
      }
      if (g == 1 && mod(s, n) == 0) out.push_back(Character::root_of_unity(n, k));
      std::size_t i = 0;
      while (i < mu && ++k[i] == n) k[i++] = 1;
      if (i == mu) break;
    }
  }
  return out;
}

}  // namespace linkslope
