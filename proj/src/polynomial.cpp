#include "dubois/polynomial.hpp"

#include <algorithm>

#include "dubois/errors.hpp"
#include "dubois/primes.hpp"

namespace dubois {

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  return Ring(p);
}

Integer Ring::normalize(const Integer& c) const {
  if (is_integers()) return c;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p_);
  return r;
}

std::string to_string(Ring r) {
  return r.is_integers() ? std::string("ZZ") : "GF(" + std::to_string(r.characteristic()) + ")";
}

void require_compatible(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring()) {
    throw PreconditionError("ring mismatch: " + to_string(f.ring()) + " vs " + to_string(g.ring()));
  }
  if (f.num_vars() != g.num_vars()) {
    throw PreconditionError("variable count mismatch: " + std::to_string(f.num_vars()) + " vs " +
                            std::to_string(g.num_vars()));
  }
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  Integer v = ring_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (inserted) return;
  it->second = ring_.normalize(it->second + v);
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::constant(Ring ring, std::size_t num_vars, const Integer& c) {
  Polynomial f(ring, num_vars);
  f.add_term(Monomial::one(num_vars), c);
  return f;
}

Polynomial Polynomial::variable(Ring ring, std::size_t num_vars, std::size_t index) {
  return monomial(ring, num_vars, Monomial::variable(num_vars, index));
}

Polynomial Polynomial::monomial(Ring ring, std::size_t num_vars, const Monomial& m, const Integer& c) {
  if (m.size() > num_vars) {
    for (std::size_t i = num_vars; i < m.size(); ++i) {
      if (m[i] != 0) throw PreconditionError("monomial uses a variable outside the ring");
    }
  }
  Polynomial f(ring, num_vars);
  std::vector<Exponent> e(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) e[i] = m[i];
  f.add_term(Monomial(std::move(e)), c);
  return f;
}

Polynomial Polynomial::from_terms(Ring ring, std::size_t num_vars,
                                  std::span<const std::pair<Monomial, Integer>> terms) {
  Polynomial f(ring, num_vars);
  for (const auto& [m, c] : terms) {
    if (m.size() == num_vars) {
      f.add_term(m, c);
    } else {
      f.add_term(monomial(ring, num_vars, m).terms_.begin()->first, c);
    }
  }
  return f;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const Monomial, Integer>& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

std::uint64_t Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

std::uint64_t Polynomial::min_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::vector<std::size_t> Polynomial::support_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    for (const auto& [m, c] : terms_) {
      if (m[i] > 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_, nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ring_, nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  Polynomial r = f;
  for (const auto& [m, c] : g.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  Polynomial r(f.ring_, f.nvars_);
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
  }
  return r;
}

Polynomial operator*(const Integer& c, const Polynomial& f) {
  Polynomial r(f.ring_, f.nvars_);
  for (const auto& [m, v] : f.terms_) r.add_term(m, c * v);
  return r;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.ring_ == g.ring_ && f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
}

Polynomial reduce_mod_p(const Polynomial& f, std::uint64_t p) {
  const Ring target = Ring::prime_field(p);
  if (f.ring() == target) return f;
  if (!f.ring().is_integers()) throw PreconditionError("reduce_mod_p expects an integer polynomial");
  std::vector<std::pair<Monomial, Integer>> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(target, f.num_vars(), terms);
}

Polynomial lift_to_integers(const Polynomial& f) {
  std::vector<std::pair<Monomial, Integer>> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(Ring::integers(), f.num_vars(), terms);
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.num_vars()) throw PreconditionError("substitute: one image per variable required");
  std::size_t out_vars = images.empty() ? 0 : images.front().num_vars();
  for (const auto& img : images) {
    if (img.ring() != f.ring() || img.num_vars() != out_vars) {
      throw PreconditionError("substitute: images must share the ring and variable count");
    }
  }
  // Powers of each image are cached since catalog and translation inputs
  // reuse small exponents many times.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(f.ring(), out_vars, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(f.ring(), out_vars);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(f.ring(), out_vars, c);
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
      if (m[i] > 0) term = term * power_of(i, m[i]);
    }
    result = result + term;
  }
  return result;
}

namespace {

std::vector<Polynomial> shifted_variables(const Polynomial& f, std::span<const Integer> shift) {
  std::vector<Polynomial> images;
  images.reserve(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    images.push_back(Polynomial::variable(f.ring(), f.num_vars(), i) +
                     Polynomial::constant(f.ring(), f.num_vars(), shift[i]));
  }
  return images;
}

}  // namespace

Polynomial translate(const Polynomial& f, std::span<const Integer> shift) {
  if (shift.size() != f.num_vars()) throw PreconditionError("translate: point dimension mismatch");
  if (!f.ring().is_integers()) throw PreconditionError("translate: integer polynomials only");
  return substitute(f, shifted_variables(f, shift));
}

Polynomial translate(const Polynomial& f, std::span<const Rational> shift) {
  if (shift.size() != f.num_vars()) throw PreconditionError("translate: point dimension mismatch");
  if (!f.ring().is_integers()) throw PreconditionError("translate: integer polynomials only");
  Integer common = 1;
  for (const auto& a : shift) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> numerators;
  for (const auto& a : shift) numerators.push_back(a.get_num() * (common / a.get_den()));
  if (common == 1) return translate(f, std::span<const Integer>(numerators));

  // L^D f(x/L + b/L) = sum_m c_m L^(D-|m|) (x + b)^m.
  const auto images = shifted_variables(f, numerators);
  const std::uint64_t degree = f.total_degree();
  Polynomial result(f.ring(), f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), common.get_mpz_t(), degree - m.total_degree());
    Polynomial single = Polynomial::monomial(f.ring(), f.num_vars(), m, c * scale);
    result = result + substitute(single, images);
  }
  return result;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.num_vars()) throw PreconditionError("evaluate: point dimension mismatch");
  if (f.ring().is_integers()) {
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
      Rational term = c;
      for (std::size_t i = 0; i < f.num_vars(); ++i) {
        for (Exponent k = 0; k < m[i]; ++k) term *= point[i];
      }
      sum += term;
    }
    sum.canonicalize();
    return sum;
  }
  const Integer p = static_cast<unsigned long>(f.ring().characteristic());
  std::vector<Integer> residues;
  for (const auto& a : point) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_den_mpz_t(), p.get_mpz_t()) == 0) {
      throw PreconditionError("evaluate: denominator not invertible mod p");
    }
    residues.push_back(f.ring().normalize(a.get_num() * inv));
  }
  Integer sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
      if (m[i] == 0) continue;
      Integer pw;
      mpz_powm_ui(pw.get_mpz_t(), residues[i].get_mpz_t(), m[i], p.get_mpz_t());
      term = f.ring().normalize(term * pw);
    }
    sum = f.ring().normalize(sum + term);
  }
  return Rational(sum);
}

Polynomial permute_variables(const Polynomial& f, std::span<const std::size_t> perm) {
  if (perm.size() != f.num_vars()) throw PreconditionError("permute_variables: wrong permutation length");
  std::vector<bool> seen(perm.size(), false);
  for (auto target : perm) {
    if (target >= perm.size() || seen[target]) throw PreconditionError("permute_variables: not a permutation");
    seen[target] = true;
  }
  std::vector<std::pair<Monomial, Integer>> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m.permuted(perm, f.num_vars()), c);
  return Polynomial::from_terms(f.ring(), f.num_vars(), terms);
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.num_vars()) throw PreconditionError("partial_derivative: variable out of range");
  std::vector<std::pair<Monomial, Integer>> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
    e.resize(f.num_vars(), 0);
    const Exponent k = e[var]--;
    terms.emplace_back(Monomial(std::move(e)), c * k);
  }
  return Polynomial::from_terms(f.ring(), f.num_vars(), terms);
}

std::vector<std::string> default_variable_names(std::size_t num_vars) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace dubois
