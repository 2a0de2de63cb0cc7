#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dubois/monomial.hpp"
#include "dubois/polynomial.hpp"

namespace dubois::gsnc {

/// Ideal generated by a nonempty set of coordinate functions.
class CoordinateIdeal {
 public:
  /// Sorted and deduplicated. Throws PreconditionError on an empty set.
  explicit CoordinateIdeal(std::vector<std::size_t> variables);

  const std::vector<std::size_t>& variables() const noexcept { return vars_; }
  bool contains_monomial(const Monomial& m) const noexcept;
  bool contains(const Polynomial& f) const;

  friend auto operator<=>(const CoordinateIdeal&, const CoordinateIdeal&) = default;

 private:
  std::vector<std::size_t> vars_;
};

/// I_1 ∩ ... ∩ I_k for coordinate ideals I_j in a ring of `ambient`
/// variables, kept in canonical form: a component whose variable set
/// contains another's is dropped (its ideal is the larger one), the rest are
/// sorted. Smooth points are not representable; handle them before building
/// a presentation.
class GsncPresentation {
 public:
  GsncPresentation(std::size_t ambient, std::vector<CoordinateIdeal> components);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<CoordinateIdeal>& components() const noexcept { return components_; }

  bool contains_monomial(const Monomial& m) const noexcept;

  /// Minimal monomial generators of the intersection: pairwise lcm of
  /// generators, component by component, with non-minimal ones pruned.
  std::vector<Monomial> monomial_generators() const;

  friend bool operator==(const GsncPresentation&, const GsncPresentation&) = default;

 private:
  std::size_t ambient_;
  std::vector<CoordinateIdeal> components_;
};

/// f lies in every component ideal.
bool contains(const GsncPresentation& presentation, const Polynomial& f);

/// Intersection of A (placed on positions `a_block`) and B (placed on
/// `b_block`) inside a ring of `ambient` variables. Blocks must be disjoint
/// and have sizes A.ambient() and B.ambient().
GsncPresentation product(const GsncPresentation& a, std::span<const std::size_t> a_block,
                         const GsncPresentation& b, std::span<const std::size_t> b_block, std::size_t ambient);

/// A on the first A.ambient() variables, B on the next B.ambient().
GsncPresentation product(const GsncPresentation& a, const GsncPresentation& b);

/// Brute-force comparison of I*J against I ∩ J on every monomial of degree
/// <= degree_bound: I*J from products of monomial generators, I ∩ J from
/// the concatenated presentation. True iff every monomial agrees.
bool product_identity_check(const GsncPresentation& a, std::span<const std::size_t> a_block,
                            const GsncPresentation& b, std::span<const std::size_t> b_block, std::size_t ambient,
                            std::uint64_t degree_bound);
bool product_identity_check(const GsncPresentation& a, const GsncPresentation& b, std::uint64_t degree_bound);

/// All monomials in `num_vars` variables of total degree <= bound.
std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, std::uint64_t bound);

// --- Du Bois evidence lattice -------------------------------------------------

enum class EvidenceReason { Gsnc, Semismooth, FedderScan, Product };

enum class SemismoothKind { PinchPoint, DoubleNormalCrossing };

/// Yes(reason) or Unknown. Yes values come only from the constructors below.
class DuBoisEvidence {
 public:
  static DuBoisEvidence unknown() { return DuBoisEvidence(); }

  bool is_yes() const noexcept { return reason_.has_value(); }
  std::optional<EvidenceReason> reason() const noexcept { return reason_; }
  /// Set for FedderScan evidence.
  std::optional<std::uint64_t> prime_bound() const noexcept { return prime_bound_; }
  /// Set for Product evidence.
  const DuBoisEvidence* left() const noexcept { return left_.get(); }
  const DuBoisEvidence* right() const noexcept { return right_.get(); }

  /// e.g. "Yes(Product(FedderScan(13), Gsnc))" or "Unknown".
  std::string describe() const;

 private:
  DuBoisEvidence() = default;

  std::optional<EvidenceReason> reason_;
  std::optional<std::uint64_t> prime_bound_;
  std::shared_ptr<const DuBoisEvidence> left_, right_;

  friend DuBoisEvidence du_bois_from_gsnc(const GsncPresentation&);
  friend DuBoisEvidence du_bois_from_semismooth(SemismoothKind);
  friend DuBoisEvidence du_bois_from_fedder_scan(bool, std::uint64_t);
  friend DuBoisEvidence du_bois_product(const DuBoisEvidence&, const DuBoisEvidence&);
};

/// Generalized simple normal crossings are Du Bois.
DuBoisEvidence du_bois_from_gsnc(const GsncPresentation& presentation);
/// Pinch points and double normal crossings are Du Bois.
DuBoisEvidence du_bois_from_semismooth(SemismoothKind kind);
/// Yes(FedderScan(bound)) when a scan gave evidence up to `prime_bound`,
/// Unknown otherwise.
DuBoisEvidence du_bois_from_fedder_scan(bool scan_gave_evidence, std::uint64_t prime_bound);
/// A product of Du Bois varieties is Du Bois: Yes x Yes -> Yes(Product).
DuBoisEvidence du_bois_product(const DuBoisEvidence& a, const DuBoisEvidence& b);

enum class SlcEvidence { Yes, Unknown };

/// A hypersurface is Gorenstein and seminormal, so Du Bois implies semi log
/// canonical there. Anything else stays Unknown.
SlcEvidence slc_from_du_bois(bool is_hypersurface, const DuBoisEvidence& evidence);

std::string to_string(EvidenceReason reason);
std::string to_string(SlcEvidence evidence);

}  // namespace dubois::gsnc
