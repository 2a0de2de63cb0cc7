#include "dubois/birational.hpp"

#include <limits>
#include <map>
#include <random>

#include "dubois/errors.hpp"

namespace dubois {

MultiplicityReport multiplicity_at(const Polynomial& f, std::span<const Rational> point) {
  if (f.is_zero()) throw PreconditionError("multiplicity of the zero polynomial");
  if (point.size() != f.num_vars()) throw PreconditionError("multiplicity_at: point dimension mismatch");
  MultiplicityReport report;
  report.point.assign(point.begin(), point.end());
  // The denominator-cleared translate has the same support as f(x + a).
  report.mu = translate(f, point).min_degree();
  return report;
}

std::int64_t discrepancy_coefficient(std::uint64_t n, std::uint64_t mu) {
  return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(mu);
}

SlcObstruction slc_obstruction_from_multiplicity(std::uint64_t mu, std::uint64_t n) {
  if (n < 1) throw PreconditionError("ambient dimension n must be >= 1");
  SlcObstruction o;
  o.mu = mu;
  o.ambient_n = n;
  o.discrepancy_coefficient = discrepancy_coefficient(n, mu);
  o.verdict = o.discrepancy_coefficient < -1 ? SlcVerdict::NotSLC : SlcVerdict::Inconclusive;
  if ((o.verdict == SlcVerdict::NotSLC) != (mu > n + 1)) {
    throw InvariantError("discrepancy threshold disagrees with mu > n + 1");
  }
  return o;
}

SlcObstruction slc_obstruction(const Polynomial& f, std::span<const Rational> point, std::uint64_t n) {
  if (f.num_vars() != n + 1) {
    throw PreconditionError("slc_obstruction: hypersurface in P^(n+1) needs n + 1 = " + std::to_string(n + 1) +
                            " variables, got " + std::to_string(f.num_vars()));
  }
  return slc_obstruction_from_multiplicity(multiplicity_at(f, point).mu, n);
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  const std::size_t m = rows.size();
  const std::size_t k = m == 0 ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != k) throw PreconditionError("rational_rank: ragged matrix");
  }
  std::vector<std::size_t> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = j;
  std::size_t rank = 0;
  while (rank < m && rank < k) {
    // Full pivoting: any nonzero entry in the trailing block. Exact
    // arithmetic, so the first nonzero found is as good as any.
    std::size_t pr = m, pc = k;
    for (std::size_t i = rank; i < m && pr == m; ++i) {
      for (std::size_t j = rank; j < k; ++j) {
        if (rows[i][cols[j]] != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == m) break;
    std::swap(rows[rank], rows[pr]);
    std::swap(cols[rank], cols[pc]);
    const Rational pivot = rows[rank][cols[rank]];
    for (std::size_t i = rank + 1; i < m; ++i) {
      const Rational factor = rows[i][cols[rank]] / pivot;
      if (factor == 0) continue;
      for (std::size_t j = rank; j < k; ++j) rows[i][cols[j]] -= factor * rows[rank][cols[j]];
    }
    ++rank;
  }
  return rank;
}

RankDropReport jacobian_rank_at(std::span<const Polynomial> map, std::span<const Rational> point) {
  const std::size_t k = point.size();
  for (const auto& component : map) {
    if (component.num_vars() != k) throw PreconditionError("jacobian_rank_at: point dimension mismatch");
  }
  std::vector<std::vector<Rational>> jacobian;
  for (const auto& component : map) {
    auto& row = jacobian.emplace_back();
    for (std::size_t j = 0; j < k; ++j) row.push_back(evaluate(partial_derivative(component, j), point));
  }
  RankDropReport report;
  report.point.assign(point.begin(), point.end());
  report.source_dimension = k;
  report.jacobian_rank = rational_rank(std::move(jacobian));
  report.drop = k - report.jacobian_rank;
  mpz_ui_pow_ui(report.multiplicity_lower_bound.get_mpz_t(), 2, report.drop);
  return report;
}

std::uint64_t multiplicity_along_line(const Polynomial& f, std::span<const Rational> point,
                                      std::span<const Integer> direction) {
  if (direction.size() != f.num_vars()) throw PreconditionError("direction dimension mismatch");
  const Polynomial shifted = translate(f, point);
  // Coefficient of t^k in shifted(t * direction), up to a nonzero scale.
  std::map<std::uint64_t, Integer> by_degree;
  for (const auto& [m, c] : shifted.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
      if (m[i] == 0) continue;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), direction[i].get_mpz_t(), m[i]);
      term *= pw;
    }
    by_degree[m.total_degree()] += term;
  }
  for (const auto& [degree, coeff] : by_degree) {
    if (coeff != 0) return degree;
  }
  return std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t random_line_multiplicity(const Polynomial& f, std::span<const Rational> point, std::uint64_t seed,
                                       unsigned trials, long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<Integer> direction(f.num_vars());
  for (unsigned t = 0; t < trials; ++t) {
    for (auto& d : direction) d = coord(rng);
    best = std::min(best, multiplicity_along_line(f, point, direction));
  }
  return best;
}

}  // namespace dubois
