#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dubois/polynomial.hpp"

namespace dubois {

struct MultiplicityReport {
  Point point;
  /// Order of vanishing at the point; 0 iff f(point) != 0.
  std::uint64_t mu = 0;
};

enum class SlcVerdict { NotSLC, Inconclusive };

/// Blow-up arithmetic at a point of multiplicity mu on a hypersurface in
/// P^(n+1): K_Z = f*K + nE and the strict transform picks up -mu E, so the
/// exceptional coefficient on the strict transform is n - mu. Below -1 the
/// hypersurface cannot be semi log canonical; otherwise nothing follows.
struct SlcObstruction {
  std::uint64_t mu = 0;
  std::uint64_t ambient_n = 0;
  std::int64_t discrepancy_coefficient = 0;
  SlcVerdict verdict = SlcVerdict::Inconclusive;
};

struct RankDropReport {
  Point point;
  std::size_t source_dimension = 0;
  std::size_t jacobian_rank = 0;
  std::size_t drop = 0;
  /// 2^drop. A lower bound on the multiplicity of the image point, never
  /// its exact value.
  Integer multiplicity_lower_bound = 1;
};

MultiplicityReport multiplicity_at(const Polynomial& f, std::span<const Rational> point);

/// n - mu.
std::int64_t discrepancy_coefficient(std::uint64_t n, std::uint64_t mu);

/// Verdict from the numbers alone: NotSLC iff mu > n + 1.
SlcObstruction slc_obstruction_from_multiplicity(std::uint64_t mu, std::uint64_t n);

/// f is a local equation of a hypersurface in P^(n+1), so it must have
/// n + 1 variables.
SlcObstruction slc_obstruction(const Polynomial& f, std::span<const Rational> point, std::uint64_t n);

/// Rank of the Jacobian of `map` (m polynomials in k variables) at the point,
/// by exact rational elimination.
RankDropReport jacobian_rank_at(std::span<const Polynomial> map, std::span<const Rational> point);

/// Rank over Q of a dense row-major matrix by Gaussian elimination with full
/// pivoting.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Order of vanishing at t = 0 of t -> f(point + t * direction). Equals
/// the multiplicity for all directions off the tangent cone, and exceeds it
/// on the cone. Returns UINT64_MAX if the line lies in the hypersurface.
std::uint64_t multiplicity_along_line(const Polynomial& f, std::span<const Rational> point,
                                      std::span<const Integer> direction);

/// Minimum of multiplicity_along_line over `trials` pseudo-random integer
/// directions drawn from [-bound, bound]^N with the given seed.
std::uint64_t random_line_multiplicity(const Polynomial& f, std::span<const Rational> point, std::uint64_t seed,
                                       unsigned trials = 8, long bound = 1000);

}  // namespace dubois
