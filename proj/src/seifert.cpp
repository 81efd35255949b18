#include "linkslope/seifert.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "linkslope/errors.hpp"

namespace linkslope {

using json = nlohmann::json;

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), std::vector<long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::string sign_key(const std::vector<int>& eps) {
  std::string key;
  for (int e : eps) key += e > 0 ? '+' : '-';
  return key;
}

namespace {

std::string flipped(const std::string& key) {
  std::string out = key;
  for (char& c : out) c = c == '+' ? '-' : '+';
  return out;
}

void check_square(const IntMatrix& m, int rank, const std::string& key) {
  if (m.size() != static_cast<std::size_t>(rank))
    throw PreconditionError("ccomplex: theta[" + key + "] has the wrong number of rows");
  for (const auto& row : m)
    if (row.size() != static_cast<std::size_t>(rank))
      throw PreconditionError("ccomplex: theta[" + key + "] is not " + std::to_string(rank) + "x" + std::to_string(rank));
}

void require_nontrivial(const Character& omega, std::size_t mu) {
  if (omega.size() != mu)
    throw PreconditionError("character has " + std::to_string(omega.size()) + " coordinates, expected " +
                            std::to_string(mu));
  if (omega.kind() == Character::Kind::Symbolic) return;
  for (std::size_t i = 0; i < mu; ++i)
    if (omega.coordinate_is_one(i)) throw PreconditionError("character coordinate " + std::to_string(i + 1) + " equals 1");
}

}  // namespace

CComplexData CComplexData::from_theta(const IntMatrix& theta, std::vector<long> kappa, int b0) {
  CComplexData d;
  d.mu = 1;
  d.rank = static_cast<int>(theta.size());
  d.thetas["+"] = theta;
  d.thetas["-"] = transpose(theta);
  d.kappa = std::move(kappa);
  d.b0 = b0;
  d.validate();
  return d;
}

void CComplexData::validate() const {
  if (mu < 1 || mu > 16) throw PreconditionError("ccomplex: mu must be between 1 and 16");
  if (rank < 0) throw PreconditionError("ccomplex: negative rank");
  if (b0 < 1) throw PreconditionError("ccomplex: b0 must be positive");
  if (kappa.size() != static_cast<std::size_t>(rank)) throw PreconditionError("ccomplex: kappa length differs from rank");
  if (thetas.size() != (std::size_t{1} << mu)) throw PreconditionError("ccomplex: expected one theta per sign vector");
  for (const auto& [key, m] : thetas) {
    if (key.size() != static_cast<std::size_t>(mu) || key.find_first_not_of("+-") != std::string::npos)
      throw PreconditionError("ccomplex: bad sign key '" + key + "'");
    check_square(m, rank, key);
    auto it = thetas.find(flipped(key));
    if (it == thetas.end()) throw PreconditionError("ccomplex: missing theta[" + flipped(key) + "]");
    if (it->second != transpose(m))
      throw PreconditionError("ccomplex: theta[" + flipped(key) + "] is not the transpose of theta[" + key + "]");
  }
}

CComplexData parse_ccomplex_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("ccomplex JSON: ") + e.what(), e.byte);
  }
  try {
    CComplexData d;
    d.mu = j.value("mu", 1);
    d.kappa = j.at("kappa").get<std::vector<long>>();
    d.b0 = j.value("b0", 1);
    for (auto& [key, m] : j.at("thetas").items()) d.thetas[key] = m.get<IntMatrix>();
    d.rank = j.contains("rank") ? j.at("rank").get<int>() : static_cast<int>(d.kappa.size());
    if (d.mu == 1 && d.thetas.count("+") && !d.thetas.count("-")) d.thetas["-"] = transpose(d.thetas["+"]);
    if (d.mu == 1 && d.thetas.count("-") && !d.thetas.count("+")) d.thetas["+"] = transpose(d.thetas["-"]);
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("ccomplex JSON: ") + e.what());
  }
}

std::string ccomplex_to_json(const CComplexData& d) {
  json j;
  j["mu"] = d.mu;
  j["rank"] = d.rank;
  j["kappa"] = d.kappa;
  j["b0"] = d.b0;
  j["thetas"] = json::object();
  for (const auto& [key, m] : d.thetas) j["thetas"][key] = m;
  return j.dump();
}

Matrix<CyclotomicElement> a_matrix(const CComplexData& d, const Character& omega) {
  require_nontrivial(omega, static_cast<std::size_t>(d.mu));
  return a_matrix_over(d, omega.exact_values(), CyclotomicElement());
}

Matrix<CyclotomicElement> e_matrix(const CComplexData& d, const Character& omega) {
  require_nontrivial(omega, static_cast<std::size_t>(d.mu));
  return e_matrix_over(d, omega.exact_values(), CyclotomicElement());
}

namespace {

std::vector<RationalFunction> generic_point(std::size_t mu) {
  std::vector<RationalFunction> out;
  for (std::size_t i = 1; i <= mu; ++i) out.emplace_back(LaurentPoly::variable(mu + 1, i));
  return out;
}

}  // namespace

SlopeValue slope_c_complex(const CComplexData& d, const Character& omega) {
  d.validate();
  const std::size_t mu = static_cast<std::size_t>(d.mu);
  require_nontrivial(omega, mu);
  if (omega.kind() == Character::Kind::Symbolic) {
    const RationalFunction zero(mu + 1);
    return classify_kappa(e_matrix_over(d, generic_point(mu), zero), d.kappa, FieldTraits<RationalFunction>::one(zero),
                          zero);
  }
  if (omega.is_exact()) {
    const CyclotomicElement zero;
    return classify_kappa(e_matrix_over(d, omega.exact_values(), zero), d.kappa, CyclotomicElement(Rational(1)), zero);
  }
  const std::complex<double> zero(0.0);
  return classify_kappa(e_matrix_over(d, omega.numeric_values(), zero), d.kappa, std::complex<double>(1.0), zero);
}

SlopeValue slope_seifert(const IntMatrix& theta, const std::vector<long>& kappa, const Character& omega) {
  const Realizability r = validate_realizability(theta);
  if (!r.ok) throw PreconditionError("theta - theta^T has an invariant factor other than 1");
  const CComplexData d = CComplexData::from_theta(theta, kappa);
  require_nontrivial(omega, 1);
  if (omega.kind() == Character::Kind::Symbolic) {
    const RationalFunction zero(2);
    const auto w = generic_point(1);
    return classify_kappa(a_matrix_over(d, w, zero), kappa, FieldTraits<RationalFunction>::one(zero) - w[0], zero);
  }
  if (omega.is_exact()) {
    const CyclotomicElement zero;
    const auto w = omega.exact_values();
    return classify_kappa(a_matrix_over(d, w, zero), kappa, CyclotomicElement(Rational(1)) - w[0], zero);
  }
  const std::complex<double> zero(0.0);
  const auto w = omega.numeric_values();
  return classify_kappa(a_matrix_over(d, w, zero), kappa, 1.0 - w[0], zero);
}

SignatureNullity signature_nullity(const CComplexData& d, const Character& omega, double tol) {
  d.validate();
  require_nontrivial(omega, static_cast<std::size_t>(d.mu));
  if (!omega.is_exact() || !omega.is_unitary())
    throw PreconditionError("signature: the character must be an exact point of the unit torus");
  const Matrix<CyclotomicElement> e = e_matrix(d, omega);
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (!(e(i, j) == e(j, i).conj())) throw std::logic_error("signature: E(omega) is not Hermitian");
  const int exact_rank = static_cast<int>(rank(e));
  const SignatureNullity numeric = hermitian_signature(to_eigen(e), tol);
  if (static_cast<int>(e.rows()) - numeric.nullity != exact_rank)
    throw std::runtime_error("signature: eigenvalue count disagrees with the exact rank; try another tolerance");
  return {numeric.signature, static_cast<int>(e.rows()) - exact_rank + d.b0 - 1};
}

std::vector<Integer> smith_invariant_factors(const IntMatrix& input) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : input) {
    m.emplace_back();
    for (long x : row) m.back().emplace_back(x);
  }
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> factors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the remaining block to (t, t).
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return factors;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold in any block entry not divisible by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    factors.push_back(abs(m[t][t]));
  }
  return factors;
}

Realizability validate_realizability(const IntMatrix& theta) {
  for (const auto& row : theta)
    if (row.size() != theta.size()) throw PreconditionError("realizability: theta must be square");
  IntMatrix skew = theta;
  for (std::size_t i = 0; i < theta.size(); ++i)
    for (std::size_t j = 0; j < theta.size(); ++j) skew[i][j] = theta[i][j] - theta[j][i];
  Realizability r;
  r.invariant_factors = smith_invariant_factors(skew);
  r.ok = std::all_of(r.invariant_factors.begin(), r.invariant_factors.end(), [](const Integer& f) { return f == 1; });
  r.r = static_cast<int>(r.invariant_factors.size()) / 2;
  r.component_bound = static_cast<int>(theta.size()) - 2 * r.r + 1;
  return r;
}

}  // namespace linkslope
