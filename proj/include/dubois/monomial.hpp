#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dubois {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial x1^e1 * ... * xN^eN.
///
/// Positions past the stored length are zero, so two monomials that differ
/// only by trailing zeros compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<Exponent>(num_vars, 0)); }
  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const noexcept { return i < exps_.size() ? exps_[i] : 0; }
  std::size_t size() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept { return degree_; }
  Exponent max_exponent() const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  /// Every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// Copy with exponents rearranged so that variable i lands on position perm[i].
  Monomial permuted(std::span<const std::size_t> perm, std::size_t num_vars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;

  /// Lexicographic comparison with x1 > x2 > ... (missing positions are zero).
  friend std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

/// Graded-lexicographic order: total degree first, ties broken by lex.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return lex_compare(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace dubois
