#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dubois/monomial.hpp"
#include "dubois/polynomial.hpp"

namespace dubois {

/// Outcome of the test f^(p-1) not in m^[p] = (x1^p, ..., xN^p) at one prime.
struct FedderVerdict {
  std::uint64_t prime = 0;
  bool passes = false;
  /// Graded-lex least monomial of f^(p-1) outside m^[p]; set iff passes.
  std::optional<Monomial> witness;

  friend bool operator==(const FedderVerdict&, const FedderVerdict&) = default;
};

enum class ScanConclusionKind { DuBoisEvidence, NoEvidence };

struct ScanConclusion {
  ScanConclusionKind kind = ScanConclusionKind::NoEvidence;
  /// Largest scanned prime at or above the floor (DuBoisEvidence only).
  std::uint64_t prime_bound = 0;
  /// Failing primes at or above the floor (NoEvidence only).
  std::vector<std::uint64_t> failing_primes;

  friend bool operator==(const ScanConclusion&, const ScanConclusion&) = default;
};

/// Verdicts over a list of primes. A scan only ever reports evidence up to
/// the largest scanned prime, never an unconditional verdict: the criterion
/// is about all but finitely many primes, which no finite scan settles.
struct FedderScanReport {
  std::string polynomial_id;
  std::vector<FedderVerdict> verdicts;  // ascending by prime
  std::vector<std::uint64_t> failing_primes;
  /// Primes below the floor are reported but do not affect the conclusion.
  std::uint64_t floor = 0;
  /// Characteristic 2 was scanned; its verdict is reported but flagged.
  bool characteristic_two_scanned = false;
  ScanConclusion conclusion;
};

struct ScanOptions {
  std::uint64_t floor = 0;
  /// Test each disjoint-variable factor separately and combine.
  bool split_factors = false;
  /// 0 = hardware concurrency.
  unsigned workers = 0;
};

/// True iff some exponent of m is >= p.
bool in_frobenius_power(const Monomial& m, std::uint64_t p) noexcept;

/// Drops every term whose monomial lies in m^[p]. f must be in F_p mode.
Polynomial prune(const Polynomial& f, std::uint64_t p);

/// prune(f^e) over F_p, pruning after every intermediate product of the
/// square-and-multiply ladder. Sound because multiplying a monomial of m^[p]
/// by anything stays in m^[p].
Polynomial pruned_power(const Polynomial& f, std::uint64_t e, std::uint64_t p);

/// Fedder-type test at p. f may be over the integers (reduced mod p first)
/// or already over F_p.
FedderVerdict frobenius_power_test(const Polynomial& f, std::uint64_t p);

/// Same verdict as frobenius_power_test, computed factor by factor on
/// disjoint_factor_split(f). The witness is the product of factor witnesses.
FedderVerdict frobenius_power_test_split(const Polynomial& f, std::uint64_t p);

/// One verdict per prime. Primes must all be prime and the list nonempty.
FedderScanReport scan_primes(const Polynomial& f, std::span<const std::uint64_t> primes,
                             const ScanOptions& options = {}, std::string polynomial_id = {});

/// Conclusion implied by a verdict list and floor.
ScanConclusion conclude(std::span<const FedderVerdict> verdicts, std::uint64_t floor);

/// Finest factorization f = g_1 * ... * g_k with the g_i in pairwise
/// disjoint sets of variables, ordered by smallest variable index. Factors
/// are primitive with a positive lowest-order term; the leftover unit is
/// folded into the last factor so the product is f exactly. Returns {f}
/// when no nontrivial split exists.
std::vector<Polynomial> disjoint_factor_split(const Polynomial& f);

}  // namespace dubois
