#include "dubois/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "dubois/errors.hpp"
#include "dubois/parallel.hpp"
#include "dubois/primes.hpp"

namespace dubois {
namespace {

using Residue = std::uint64_t;
using SparseTerms = std::vector<std::pair<Monomial, Residue>>;

Residue mulmod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
}

Polynomial to_field(const Polynomial& f, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (f.ring().is_integers()) return reduce_mod_p(f, p);
  if (f.ring().characteristic() != p) {
    throw PreconditionError("prime mismatch: polynomial over " + to_string(f.ring()) + ", test at p = " +
                            std::to_string(p));
  }
  return f;
}

SparseTerms surviving_terms(const Polynomial& f, std::uint64_t p) {
  SparseTerms out;
  for (const auto& [m, c] : f.terms()) {
    if (!in_frobenius_power(m, p)) out.emplace_back(m, c.get_ui());
  }
  return out;
}

// Product of two pruned polynomials, skipping any product monomial that
// lands in m^[p].
SparseTerms pruned_product(const SparseTerms& a, const SparseTerms& b, std::uint64_t p, std::size_t nvars) {
  std::unordered_map<Monomial, Residue, MonomialHash> acc;
  std::vector<Exponent> scratch(nvars);
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      bool dead = false;
      for (std::size_t i = 0; i < nvars; ++i) {
        scratch[i] = ma[i] + mb[i];
        if (scratch[i] >= p) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      Residue& slot = acc[Monomial(scratch)];
      slot = (slot + mulmod(ca, cb, p)) % p;
    }
  }
  SparseTerms out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.emplace_back(m, c);
  }
  return out;
}

Polynomial to_polynomial(const SparseTerms& terms, Ring ring, std::size_t nvars) {
  std::vector<std::pair<Monomial, Integer>> converted;
  converted.reserve(terms.size());
  for (const auto& [m, c] : terms) converted.emplace_back(m, Integer(static_cast<unsigned long>(c)));
  return Polynomial::from_terms(ring, nvars, converted);
}

FedderVerdict verdict_from_power(const Polynomial& power, std::uint64_t p) {
  FedderVerdict v;
  v.prime = p;
  v.passes = !power.is_zero();
  if (v.passes) v.witness = power.terms().begin()->first;
  return v;
}

// Integer content with the sign of the lowest-order term.
Integer signed_content(const Polynomial& g) {
  Integer content = 0;
  for (const auto& [m, c] : g.terms()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (g.terms().begin()->second < 0) content = -content;
  return content;
}

// Primitive over ZZ, monic over F_p, both keyed on the lowest-order
// (graded-lex least) term so that e.g. xn^2 - x1^2 x(n+1) keeps its sign.
Polynomial normalize_factor(const Polynomial& g) {
  if (g.ring().is_integers()) {
    const Integer content = signed_content(g);
    std::vector<std::pair<Monomial, Integer>> terms;
    for (const auto& [m, c] : g.terms()) terms.emplace_back(m, c / content);
    return Polynomial::from_terms(g.ring(), g.num_vars(), terms);
  }
  Integer inv;
  const Integer p = static_cast<unsigned long>(g.ring().characteristic());
  mpz_invert(inv.get_mpz_t(), g.terms().begin()->second.get_mpz_t(), p.get_mpz_t());
  return inv * g;
}

// Variables i, j are linked when f * d2f/dxi dxj != df/dxi * df/dxj. Over a
// field of characteristic 0 the connected components of this graph are
// exactly the blocks of the finest disjoint-variable factorization, since
// the cross second derivatives of log f vanish precisely across blocks.
std::vector<std::vector<std::size_t>> separability_blocks(const Polynomial& f) {
  const Polynomial g = f.ring().is_integers() ? f : lift_to_integers(f);
  const auto vars = g.support_variables();
  std::vector<std::size_t> parent(vars.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Polynomial> first;
  for (auto v : vars) first.push_back(partial_derivative(g, v));
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      if (find(a) == find(b)) continue;
      const Polynomial mixed = partial_derivative(first[a], vars[b]);
      if (!(g * mixed - first[a] * first[b]).is_zero()) parent[find(a)] = find(b);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of_root(vars.size(), static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < vars.size(); ++a) {
    const auto root = find(a);
    if (block_of_root[root] == static_cast<std::size_t>(-1)) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(vars[a]);
  }
  return blocks;
}

// Terms of f whose exponents outside `block` agree with `reference`,
// restricted to the block variables.
Polynomial block_slice(const Polynomial& f, const std::vector<std::size_t>& block, const Monomial& reference) {
  std::vector<bool> in_block(f.num_vars(), false);
  for (auto v : block) in_block[v] = true;
  std::vector<std::pair<Monomial, Integer>> terms;
  for (const auto& [m, c] : f.terms()) {
    bool matches = true;
    for (std::size_t i = 0; i < f.num_vars() && matches; ++i) {
      if (!in_block[i] && m[i] != reference[i]) matches = false;
    }
    if (!matches) continue;
    std::vector<Exponent> e(f.num_vars(), 0);
    for (auto v : block) e[v] = m[v];
    terms.emplace_back(Monomial(std::move(e)), c);
  }
  return Polynomial::from_terms(f.ring(), f.num_vars(), terms);
}

}  // namespace

bool in_frobenius_power(const Monomial& m, std::uint64_t p) noexcept {
  for (auto e : m.exponents()) {
    if (e >= p) return true;
  }
  return false;
}

Polynomial prune(const Polynomial& f, std::uint64_t p) {
  if (!f.ring().is_prime_field() || f.ring().characteristic() != p) {
    throw PreconditionError("prune: polynomial must be over GF(" + std::to_string(p) + ")");
  }
  return to_polynomial(surviving_terms(f, p), f.ring(), f.num_vars());
}

Polynomial pruned_power(const Polynomial& f, std::uint64_t e, std::uint64_t p) {
  const Polynomial fp = to_field(f, p);
  const std::size_t nvars = fp.num_vars();
  SparseTerms result{{Monomial::one(nvars), 1}};
  SparseTerms base = surviving_terms(fp, p);
  while (e > 0 && !result.empty()) {
    if (e & 1U) result = pruned_product(result, base, p, nvars);
    e >>= 1U;
    if (e > 0) base = pruned_product(base, base, p, nvars);
  }
  return to_polynomial(result, fp.ring(), nvars);
}

FedderVerdict frobenius_power_test(const Polynomial& f, std::uint64_t p) {
  if (f.is_zero()) throw PreconditionError("Fedder test of the zero polynomial");
  return verdict_from_power(pruned_power(f, p - 1, p), p);
}

FedderVerdict frobenius_power_test_split(const Polynomial& f, std::uint64_t p) {
  if (f.is_zero()) throw PreconditionError("Fedder test of the zero polynomial");
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  FedderVerdict combined{p, true, Monomial::one(f.num_vars())};
  for (const auto& factor : disjoint_factor_split(f)) {
    const FedderVerdict v = frobenius_power_test(factor, p);
    if (!v.passes) return FedderVerdict{p, false, std::nullopt};
    combined.witness = *combined.witness * *v.witness;
  }
  return combined;
}

ScanConclusion conclude(std::span<const FedderVerdict> verdicts, std::uint64_t floor) {
  ScanConclusion c;
  bool any_counted = false;
  for (const auto& v : verdicts) {
    if (v.prime < floor) continue;
    any_counted = true;
    c.prime_bound = std::max(c.prime_bound, v.prime);
    if (!v.passes) c.failing_primes.push_back(v.prime);
  }
  std::sort(c.failing_primes.begin(), c.failing_primes.end());
  if (any_counted && c.failing_primes.empty()) {
    c.kind = ScanConclusionKind::DuBoisEvidence;
  } else {
    c.kind = ScanConclusionKind::NoEvidence;
    c.prime_bound = 0;
  }
  return c;
}

FedderScanReport scan_primes(const Polynomial& f, std::span<const std::uint64_t> primes,
                             const ScanOptions& options, std::string polynomial_id) {
  if (primes.empty()) throw PreconditionError("empty prime list");
  for (auto p : primes) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  }
  if (f.is_zero()) throw PreconditionError("Fedder test of the zero polynomial");

  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  FedderScanReport report;
  report.polynomial_id = std::move(polynomial_id);
  report.floor = options.floor;
  report.verdicts = parallel_map<FedderVerdict>(
      sorted.size(),
      [&](std::size_t i) {
        return options.split_factors ? frobenius_power_test_split(f, sorted[i])
                                     : frobenius_power_test(f, sorted[i]);
      },
      options.workers);
  for (const auto& v : report.verdicts) {
    if (!v.passes) report.failing_primes.push_back(v.prime);
    if (v.prime == 2) report.characteristic_two_scanned = true;
  }
  report.conclusion = conclude(report.verdicts, options.floor);
  return report;
}

std::vector<Polynomial> disjoint_factor_split(const Polynomial& f) {
  if (f.is_zero()) return {f};
  const auto blocks = separability_blocks(f);
  if (blocks.size() < 2) return {f};

  const Monomial& reference = f.leading_term().first;
  std::vector<Polynomial> factors;
  Polynomial product = Polynomial::constant(f.ring(), f.num_vars(), 1);
  for (const auto& block : blocks) {
    factors.push_back(normalize_factor(block_slice(f, block, reference)));
    product = product * factors.back();
  }
  // f = unit * product; fold the unit into the last factor.
  const Integer& lead_f = f.leading_term().second;
  const Integer& lead_p = product.leading_term().second;
  Integer unit;
  if (f.ring().is_integers()) {
    if (!mpz_divisible_p(lead_f.get_mpz_t(), lead_p.get_mpz_t())) return {f};
    unit = lead_f / lead_p;
  } else {
    const Integer p = static_cast<unsigned long>(f.ring().characteristic());
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lead_p.get_mpz_t(), p.get_mpz_t());
    unit = f.ring().normalize(lead_f * inv);
  }
  if (!(unit * product == f)) return {f};
  factors.back() = unit * factors.back();
  return factors;
}

}  // namespace dubois
