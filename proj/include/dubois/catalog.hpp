#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dubois/polynomial.hpp"

namespace dubois::catalog {

/// Local equation of one singularity class from Roberts' list of the
/// singularities of a generic projection to P^(n+1), or one of the two
/// semismooth normal forms. Variables are x1..x(n+1) at positions 0..n.
struct CatalogCase {
  std::string label;            // "0", "1a", "1b", "2a", "2b", "2c", "3", "4", "dnc", "pinch"
  std::size_t n = 0;            // target dimension; the ring has n + 1 variables
  std::optional<std::size_t> d; // number of sheets, case 0 only
  Polynomial polynomial{Ring::integers(), 0};
  std::string citation;
  std::size_t min_n = 0;
  /// False only for case 0 with d = 1 (a smooth hyperplane).
  bool singular = true;
};

/// x1 * ... * xd, the d-sheet normal crossing. Requires 1 <= d <= n + 1.
CatalogCase case0(std::size_t d, std::size_t n);
/// Pinch point xn^2 - x1^2 x(n+1).
CatalogCase case1a(std::size_t n);
/// xn^3 + Phi4 + Phi5.
CatalogCase case1b(std::size_t n);
CatalogCase case2a(std::size_t n);
CatalogCase case2b(std::size_t n);
CatalogCase case2c(std::size_t n);
CatalogCase case3(std::size_t n);
CatalogCase case4(std::size_t n);

/// Double normal crossing x1 x2.
CatalogCase double_normal_crossing(std::size_t n);
/// Pinch point in the semismooth normal form x1 x2^2 - x3^2. It equals
/// -case1a(2) after renaming x1 -> x3, x2 -> x1, x3 -> x2.
CatalogCase pinch(std::size_t n);

/// Dispatch by label. For "0" the sheet count d defaults to n + 1.
CatalogCase make_case(const std::string& label, std::size_t n, std::optional<std::size_t> d = std::nullopt);

/// Smallest n for which the label's variable indices are pairwise distinct.
std::size_t min_n_for(const std::string& label, std::optional<std::size_t> d = std::nullopt);

/// The eight generic-projection classes in report order.
const std::vector<std::string>& battery_labels();
const std::vector<std::string>& all_labels();

/// Polynomial x_u^3 + Phi4 + Phi5 with the five formal slots (a, b, c, u, v)
/// placed at the given variable positions:
///   Phi4 = a^2 c u - a^3 v + 2 b c u^2 - 3 a b u v
///   Phi5 = b^2 c^2 u - a b^2 c v - b^3 v^2
Polynomial cubic_phi_form(std::size_t num_vars, const std::array<std::size_t, 5>& slots);

/// Normalization of the pinch point by the plane:
/// (y1, y2) -> (y1 y2, y2, y1^2). Stored data, not computed. The map
/// parametrizes the pinch in the coordinates x1^2 - x2^2 x3 (the Roberts form
/// with xn -> x1, x1 -> x2, x(n+1) -> x3), which is what it pulls back to 0.
struct PinchNormalization {
  Polynomial equation{Ring::integers(), 3};
  std::array<Polynomial, 3> map{Polynomial(Ring::integers(), 2), Polynomial(Ring::integers(), 2),
                                Polynomial(Ring::integers(), 2)};
  /// Target variables generating the conductor ideal: (x1, x2).
  std::vector<std::size_t> conductor_variables;
  /// Source variables generating the preimage of the conductor: (y2).
  std::vector<std::size_t> conductor_preimage_variables;
};

PinchNormalization pinch_normalization_fixture();

}  // namespace dubois::catalog
