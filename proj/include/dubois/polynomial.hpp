#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dubois/monomial.hpp"

namespace dubois {

using Integer = mpz_class;
using Rational = mpq_class;
using Point = std::vector<Rational>;

/// Coefficient ring of a polynomial: the integers, or F_p for a prime p.
class Ring {
 public:
  static Ring integers() { return Ring(0); }
  /// Throws PreconditionError if p is not prime.
  static Ring prime_field(std::uint64_t p);

  bool is_integers() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  /// 0 for the integers.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// Canonical representative of c in this ring.
  Integer normalize(const Integer& c) const;

  friend bool operator==(Ring, Ring) = default;

 private:
  explicit Ring(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

std::string to_string(Ring r);

/// Sparse multivariate polynomial in canonical form.
///
/// Terms are kept in graded-lex order with no zero coefficients. In F_p mode
/// every stored coefficient lies in [0, p-1]. Values are immutable once
/// built; all arithmetic returns new polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexLess>;

  Polynomial(Ring ring, std::size_t num_vars) : ring_(ring), nvars_(num_vars) {}

  static Polynomial constant(Ring ring, std::size_t num_vars, const Integer& c);
  static Polynomial variable(Ring ring, std::size_t num_vars, std::size_t index);
  static Polynomial monomial(Ring ring, std::size_t num_vars, const Monomial& m, const Integer& c = 1);
  /// Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(Ring ring, std::size_t num_vars,
                               std::span<const std::pair<Monomial, Integer>> terms);

  Ring ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const;
  /// Graded-lex largest term. Precondition: nonzero.
  const std::pair<const Monomial, Integer>& leading_term() const;

  /// Largest total degree; 0 for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  /// Smallest total degree of a term (order of vanishing at the origin); 0 for zero.
  std::uint64_t min_degree() const noexcept;
  /// Variables with a positive exponent somewhere in the polynomial.
  std::vector<std::size_t> support_variables() const;

  Polynomial operator-() const;
  Polynomial pow(std::uint64_t e) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Integer& c, const Polynomial& f);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void add_term(const Monomial& m, const Integer& c);

  Ring ring_;
  std::size_t nvars_;
  TermMap terms_;
};

/// Throws PreconditionError unless f and g share ring and variable count.
void require_compatible(const Polynomial& f, const Polynomial& g);

/// Image of an integer polynomial in F_p[x].
Polynomial reduce_mod_p(const Polynomial& f, std::uint64_t p);

/// Substitutes x_i -> images[i]. All images share a ring with f and a
/// common variable count, which becomes the variable count of the result.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// f(x + a) for an integer shift a. Integer polynomials only.
Polynomial translate(const Polynomial& f, std::span<const Integer> shift);

/// Translation to a rational point a = b / L (L the lcm of denominators),
/// returned with denominators cleared: L^deg(f) * f(x / L + a). Its term
/// support matches f(x + a) exactly, and for integer points it is f(x + a).
Polynomial translate(const Polynomial& f, std::span<const Rational> shift);

/// Exact value at a point. In F_p mode the result is reduced into [0, p-1];
/// point denominators must then be invertible mod p.
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

/// Ring isomorphism sending variable i to variable perm[i]; perm must be a
/// permutation of 0..N-1.
Polynomial permute_variables(const Polynomial& f, std::span<const std::size_t> perm);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Integer polynomial lifted from an F_p one (coefficients read as 0..p-1).
Polynomial lift_to_integers(const Polynomial& f);

/// Names x1..xN.
std::vector<std::string> default_variable_names(std::size_t num_vars);

}  // namespace dubois
