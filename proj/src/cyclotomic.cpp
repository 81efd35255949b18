#include "linkslope/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linkslope {

namespace detail {

struct CyclotomicData {
  int n = 1;
  int degree = 1;
  std::vector<long> phi;                      // Phi_n, constant term first, monic
  std::vector<std::vector<long>> power_table;  // x^k mod Phi_n for 0 <= k < n
};

}  // namespace detail

namespace {

using detail::CyclotomicData;
using QPoly = std::vector<Rational>;

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> q = compute_cyclotomic(d);
    std::vector<long> quotient(p.size() - q.size() + 1, 0);
    for (int i = static_cast<int>(p.size()) - 1; i >= static_cast<int>(q.size()) - 1; --i) {
      long c = p[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::size_t shift = static_cast<std::size_t>(i) - (q.size() - 1);
      quotient[shift] = c;
      for (std::size_t j = 0; j < q.size(); ++j) p[shift + j] -= c * q[j];
    }
    p = quotient;
  }
  return p;
}

std::unique_ptr<CyclotomicData> build_field(int n) {
  auto data = std::make_unique<CyclotomicData>();
  data->n = n;
  data->phi = compute_cyclotomic(n);
  data->degree = static_cast<int>(data->phi.size()) - 1;
  const std::size_t deg = static_cast<std::size_t>(data->degree);
  std::vector<long> r(deg, 0);
  r[0] = 1;
  if (deg == 1 && n == 1) r[0] = 1;
  for (int k = 0; k < n; ++k) {
    data->power_table.push_back(r);
    // multiply by x and reduce with the monic Phi_n
    long top = r[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) r[j] = r[j - 1];
    r[0] = 0;
    for (std::size_t j = 0; j < deg; ++j) r[j] -= top * data->phi[j];
  }
  return data;
}

const CyclotomicData* field_data(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_field(n)).first;
  return it->second.get();
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Accumulate c * x^k (k reduced mod n) into a coefficient vector.
void add_power(std::vector<Rational>& out, const CyclotomicData& f, long k, const Rational& c) {
  if (c == 0) return;
  const auto& row = f.power_table[static_cast<std::size_t>(mod(k, f.n))];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) out[j] += c * row[j];
  }
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of univariate polynomials over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lb = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Rational c = a[i] / lb;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (i == 0) break;
  }
  trim(a);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

int euler_phi(int n) { return field_data(n)->degree; }

std::vector<long> cyclotomic_polynomial(int n) { return field_data(n)->phi; }

CyclotomicElement::CyclotomicElement() : field_(field_data(1)), coeffs_(1, Rational(0)) {}

CyclotomicElement::CyclotomicElement(const Rational& q, int conductor)
    : field_(field_data(conductor)), coeffs_(static_cast<std::size_t>(field_->degree), Rational(0)) {
  coeffs_[0] = q;
  coeffs_[0].canonicalize();
}

CyclotomicElement::CyclotomicElement(int conductor, std::vector<Rational> coeffs)
    : field_(field_data(conductor)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(field_->degree))
    throw std::invalid_argument("CyclotomicElement: coefficient count must equal phi(n)");
  for (auto& c : coeffs_) c.canonicalize();
}

CyclotomicElement::CyclotomicElement(const CyclotomicData* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CyclotomicElement CyclotomicElement::zeta(int n, long k) {
  const CyclotomicData* f = field_data(n);
  std::vector<Rational> c(static_cast<std::size_t>(f->degree), Rational(0));
  add_power(c, *f, k, Rational(1));
  return CyclotomicElement(f, std::move(c));
}

int CyclotomicElement::conductor() const { return field_->n; }

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Rational CyclotomicElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("CyclotomicElement: not rational");
  return coeffs_[0];
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicElement CyclotomicElement::embed(int m) const {
  const int n = field_->n;
  if (m == n) return *this;
  if (m % n != 0) throw std::invalid_argument("CyclotomicElement::embed: conductor must divide target");
  const CyclotomicData* g = field_data(m);
  std::vector<Rational> c(static_cast<std::size_t>(g->degree), Rational(0));
  const long step = m / n;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) add_power(c, *g, static_cast<long>(j) * step, coeffs_[j]);
  return CyclotomicElement(g, std::move(c));
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  if (rhs.field_ != field_) {
    const int m = lcm_int(field_->n, rhs.field_->n);
    *this = embed(m);
    return *this += rhs.embed(m);
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) { return *this += -rhs; }

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
  if (rhs.field_ != field_) {
    // Rationals scale without leaving the field.
    if (rhs.is_rational()) {
      for (auto& c : coeffs_) c *= rhs.coeffs_[0];
      return *this;
    }
    if (is_rational()) {
      Rational q = coeffs_[0];
      *this = rhs;
      for (auto& c : coeffs_) c *= q;
      return *this;
    }
    const int m = lcm_int(field_->n, rhs.field_->n);
    *this = embed(m);
    return *this *= rhs.embed(m);
  }
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (k < d) {
      out[k] += prod[k];
    } else {
      add_power(out, *field_, static_cast<long>(k), prod[k]);
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw std::domain_error("CyclotomicElement::inverse: zero");
  if (is_rational()) {
    CyclotomicElement r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: s * a + t * Phi = 1.
  QPoly phi(field_->phi.begin(), field_->phi.end());
  QPoly a = coeffs_;
  trim(a);
  QPoly r0 = phi, r1 = a;
  QPoly s0 = {}, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("CyclotomicElement::inverse: not invertible");
  }
  Rational c = r1[0];
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  auto [q, rem] = divmod(s1, phi);
  for (std::size_t j = 0; j < rem.size(); ++j) out[j] = rem[j] / c;
  return CyclotomicElement(field_, std::move(out));
}

CyclotomicElement& CyclotomicElement::operator/=(const CyclotomicElement& rhs) { return *this *= rhs.inverse(); }

CyclotomicElement CyclotomicElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicElement result(Rational(1), field_->n);
  CyclotomicElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::conj() const {
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) add_power(out, *field_, -static_cast<long>(j), coeffs_[j]);
  return CyclotomicElement(field_, std::move(out));
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const int m = lcm_int(a.field_->n, b.field_->n);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

CyclotomicElement CyclotomicElement::reduced() const {
  if (is_rational()) return CyclotomicElement(coeffs_[0]);
  const int n = field_->n;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const CyclotomicData* g = field_data(d);
    const std::size_t cols = static_cast<std::size_t>(g->degree);
    const std::size_t rows = coeffs_.size();
    // Augmented system: columns are zeta_d^j written in Q(zeta_n).
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j) {
      CyclotomicElement e = zeta(d, static_cast<long>(j)).embed(n);
      for (std::size_t i = 0; i < rows; ++i) m[i][j] = e.coeffs_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = coeffs_[i];
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && m[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[r]);
      Rational inv = 1 / m[r][c];
      for (auto& x : m[r]) x *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || m[i][c] == 0) continue;
        Rational f = m[i][c];
        for (std::size_t k = 0; k <= cols; ++k) m[i][k] -= f * m[r][k];
      }
      pivots.push_back(c);
      ++r;
    }
    bool consistent = true;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][cols] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rational> y(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = m[i][cols];
    return CyclotomicElement(g, std::move(y));
  }
  return *this;
}

std::complex<double> CyclotomicElement::to_complex() const {
  std::complex<double> z = 0;
  const double n = field_->n;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    z += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  const std::string z = "zeta" + std::to_string(field_->n);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << a.get_str();
      continue;
    }
    if (a != 1) out << a.get_str() << "*";
    out << z;
    if (j > 1) out << "^" << j;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace linkslope
