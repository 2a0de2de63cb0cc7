#include "dubois/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "dubois/errors.hpp"

namespace dubois {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  if (index >= num_vars) throw PreconditionError("variable index out of range");
  std::vector<Exponent> e(num_vars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

Exponent Monomial::max_exponent() const noexcept {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Exponent> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (*this)[i] + other[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max((*this)[i], other[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::permuted(std::span<const std::size_t> perm, std::size_t num_vars) const {
  std::vector<Exponent> e(num_vars, 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (i >= perm.size() || perm[i] >= num_vars) throw PreconditionError("permutation does not cover variable");
    e[perm[i]] = exps_[i];
  }
  return Monomial(std::move(e));
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return false;
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) noexcept {
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // Trailing zeros must not affect the hash.
  auto e = m.exponents();
  std::size_t len = e.size();
  while (len > 0 && e[len - 1] == 0) --len;
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= e[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dubois
