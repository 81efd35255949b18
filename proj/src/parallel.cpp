#include "linkslope/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linkslope/errors.hpp"
#include "linkslope/fox.hpp"
#include "linkslope/linear_algebra.hpp"

namespace linkslope {

namespace {

SlopeOutcome evaluate_one(const Presentation& p, const Character& omega) {
  SlopeOutcome out;
  try {
    out.value = slope_at(p, omega);
  } catch (const PreconditionError& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> all;
  if (k > n) return all;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    all.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return all;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<SlopeOutcome> evaluate_slopes_serial(const Presentation& p, std::span<const Character> omegas) {
  std::vector<SlopeOutcome> out;
  out.reserve(omegas.size());
  for (const auto& w : omegas) out.push_back(evaluate_one(p, w));
  return out;
}

std::vector<SlopeOutcome> evaluate_slopes(const Presentation& p, std::span<const Character> omegas) {
  std::vector<SlopeOutcome> out(omegas.size());
  const long n = static_cast<long>(omegas.size());
  // Anything other than a precondition failure is rethrown after the loop;
  // exceptions must not escape an OpenMP region.
  std::vector<std::string> fatal(omegas.size());
  const double tol = numeric_zero_tolerance;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    numeric_zero_tolerance = tol;
    try {
      out[static_cast<std::size_t>(i)] = evaluate_one(p, omegas[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      fatal[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const auto& f : fatal)
    if (!f.empty()) throw std::runtime_error(f);
  return out;
}

LaurentPoly alexander_order_parallel(const Presentation& input, int r) {
  if (r < 0) throw PreconditionError("alexander_order: r must be nonnegative");
  const Presentation p = tietze_simplify(input);
  const long size = static_cast<long>(p.generator_count()) - r - 1;
  if (size <= 0) return LaurentPoly(p.nvars(), Rational(1));
  if (static_cast<std::size_t>(size) > p.relators.size()) return LaurentPoly(p.nvars());
  const FoxComplex c = FoxComplex::build(p);
  const std::size_t k = static_cast<std::size_t>(size);
  const auto rows = subsets(c.d1.size(), k);
  const auto cols = subsets(p.generator_count(), k);
  const long total = static_cast<long>(rows.size() * cols.size());
  std::vector<LaurentPoly> ms(static_cast<std::size_t>(total));
  std::vector<std::string> fatal(ms.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < total; ++t) {
    const auto& ri = rows[static_cast<std::size_t>(t) / cols.size()];
    const auto& ci = cols[static_cast<std::size_t>(t) % cols.size()];
    try {
      std::vector<std::vector<LaurentPoly>> sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i].push_back(c.d1[ri[i]][ci[j]]);
      ms[static_cast<std::size_t>(t)] = determinant(std::move(sub));
    } catch (const std::exception& e) {
      fatal[static_cast<std::size_t>(t)] = e.what();
    }
  }
  for (const auto& f : fatal)
    if (!f.empty()) throw std::runtime_error(f);
  std::vector<LaurentPoly> nonzero;
  for (auto& m : ms)
    if (!m.is_zero()) nonzero.push_back(std::move(m));
  if (nonzero.empty()) return LaurentPoly(p.nvars());
  return multivariate_gcd(nonzero);
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace linkslope
