#include "dubois/gsnc.hpp"

#include <algorithm>
#include <functional>

#include "dubois/errors.hpp"

namespace dubois::gsnc {

CoordinateIdeal::CoordinateIdeal(std::vector<std::size_t> variables) : vars_(std::move(variables)) {
  if (vars_.empty()) throw PreconditionError("coordinate ideal needs at least one variable");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool CoordinateIdeal::contains_monomial(const Monomial& m) const noexcept {
  return std::any_of(vars_.begin(), vars_.end(), [&](std::size_t v) { return m[v] > 0; });
}

bool CoordinateIdeal::contains(const Polynomial& f) const {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& term) { return contains_monomial(term.first); });
}

GsncPresentation::GsncPresentation(std::size_t ambient, std::vector<CoordinateIdeal> components)
    : ambient_(ambient) {
  if (components.empty()) throw PreconditionError("presentation needs at least one component");
  for (const auto& c : components) {
    if (c.variables().back() >= ambient) throw PreconditionError("component variable outside the ambient ring");
  }
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());
  auto subset = [](const CoordinateIdeal& small, const CoordinateIdeal& big) {
    return std::includes(big.variables().begin(), big.variables().end(), small.variables().begin(),
                         small.variables().end());
  };
  for (std::size_t i = 0; i < components.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < components.size() && !redundant; ++j) {
      redundant = i != j && subset(components[j], components[i]);
    }
    if (!redundant) components_.push_back(components[i]);
  }
}

bool GsncPresentation::contains_monomial(const Monomial& m) const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [&](const CoordinateIdeal& c) { return c.contains_monomial(m); });
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), GrlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    // Sorted by degree, so any divisor of g is already in `out`.
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  }
  return out;
}

std::vector<Monomial> ideal_generators(const CoordinateIdeal& c, std::size_t ambient) {
  std::vector<Monomial> gens;
  for (auto v : c.variables()) gens.push_back(Monomial::variable(ambient, v));
  return gens;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> place(const std::vector<Monomial>& gens, std::span<const std::size_t> block,
                            std::size_t ambient) {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(g.permuted(block, ambient));
  return out;
}

void check_blocks(const GsncPresentation& a, std::span<const std::size_t> a_block, const GsncPresentation& b,
                  std::span<const std::size_t> b_block, std::size_t ambient) {
  if (a_block.size() != a.ambient() || b_block.size() != b.ambient()) {
    throw PreconditionError("product: block size must match the factor's variable count");
  }
  std::vector<bool> used(ambient, false);
  for (auto block : {a_block, b_block}) {
    for (auto v : block) {
      if (v >= ambient) throw PreconditionError("product: block position outside the combined ring");
      if (used[v]) throw PreconditionError("product: variable blocks overlap");
      used[v] = true;
    }
  }
}

std::vector<std::size_t> iota_block(std::size_t start, std::size_t size) {
  std::vector<std::size_t> block(size);
  for (std::size_t i = 0; i < size; ++i) block[i] = start + i;
  return block;
}

}  // namespace

std::vector<Monomial> GsncPresentation::monomial_generators() const {
  std::vector<Monomial> gens = ideal_generators(components_.front(), ambient_);
  for (std::size_t i = 1; i < components_.size(); ++i) {
    std::vector<Monomial> next;
    for (const auto& g : gens) {
      for (const auto& h : ideal_generators(components_[i], ambient_)) next.push_back(g.lcm(h));
    }
    gens = minimalize(std::move(next));
  }
  return gens;
}

bool contains(const GsncPresentation& presentation, const Polynomial& f) {
  if (f.num_vars() != presentation.ambient()) throw PreconditionError("contains: variable count mismatch");
  return std::all_of(presentation.components().begin(), presentation.components().end(),
                     [&](const CoordinateIdeal& c) { return c.contains(f); });
}

GsncPresentation product(const GsncPresentation& a, std::span<const std::size_t> a_block,
                         const GsncPresentation& b, std::span<const std::size_t> b_block, std::size_t ambient) {
  check_blocks(a, a_block, b, b_block, ambient);
  std::vector<CoordinateIdeal> components;
  auto append = [&](const GsncPresentation& p, std::span<const std::size_t> block) {
    for (const auto& c : p.components()) {
      std::vector<std::size_t> vars;
      for (auto v : c.variables()) vars.push_back(block[v]);
      components.emplace_back(std::move(vars));
    }
  };
  append(a, a_block);
  append(b, b_block);
  return GsncPresentation(ambient, std::move(components));
}

GsncPresentation product(const GsncPresentation& a, const GsncPresentation& b) {
  const auto a_block = iota_block(0, a.ambient());
  const auto b_block = iota_block(a.ambient(), b.ambient());
  return product(a, a_block, b, b_block, a.ambient() + b.ambient());
}

std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, std::uint64_t bound) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(num_vars, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i == num_vars) {
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      e[i] = static_cast<Exponent>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, bound);
  return out;
}

bool product_identity_check(const GsncPresentation& a, std::span<const std::size_t> a_block,
                            const GsncPresentation& b, std::span<const std::size_t> b_block, std::size_t ambient,
                            std::uint64_t degree_bound) {
  if (degree_bound < 1) throw PreconditionError("product_identity_check: degree bound must be >= 1");
  const GsncPresentation intersection = product(a, a_block, b, b_block, ambient);
  const auto i_gens = place(a.monomial_generators(), a_block, ambient);
  const auto j_gens = place(b.monomial_generators(), b_block, ambient);
  std::vector<Monomial> product_gens;
  for (const auto& g : i_gens) {
    for (const auto& h : j_gens) product_gens.push_back(g * h);
  }
  for (const auto& m : monomials_up_to_degree(ambient, degree_bound)) {
    if (in_monomial_ideal(m, product_gens) != intersection.contains_monomial(m)) return false;
  }
  return true;
}

bool product_identity_check(const GsncPresentation& a, const GsncPresentation& b, std::uint64_t degree_bound) {
  const auto a_block = iota_block(0, a.ambient());
  const auto b_block = iota_block(a.ambient(), b.ambient());
  return product_identity_check(a, a_block, b, b_block, a.ambient() + b.ambient(), degree_bound);
}

DuBoisEvidence du_bois_from_gsnc(const GsncPresentation&) {
  DuBoisEvidence e;
  e.reason_ = EvidenceReason::Gsnc;
  return e;
}

DuBoisEvidence du_bois_from_semismooth(SemismoothKind) {
  DuBoisEvidence e;
  e.reason_ = EvidenceReason::Semismooth;
  return e;
}

DuBoisEvidence du_bois_from_fedder_scan(bool scan_gave_evidence, std::uint64_t prime_bound) {
  DuBoisEvidence e;
  if (!scan_gave_evidence) return e;
  e.reason_ = EvidenceReason::FedderScan;
  e.prime_bound_ = prime_bound;
  return e;
}

DuBoisEvidence du_bois_product(const DuBoisEvidence& a, const DuBoisEvidence& b) {
  DuBoisEvidence e;
  if (!a.is_yes() || !b.is_yes()) return e;
  e.reason_ = EvidenceReason::Product;
  e.left_ = std::make_shared<const DuBoisEvidence>(a);
  e.right_ = std::make_shared<const DuBoisEvidence>(b);
  return e;
}

SlcEvidence slc_from_du_bois(bool is_hypersurface, const DuBoisEvidence& evidence) {
  return is_hypersurface && evidence.is_yes() ? SlcEvidence::Yes : SlcEvidence::Unknown;
}

std::string to_string(EvidenceReason reason) {
  switch (reason) {
    case EvidenceReason::Gsnc: return "Gsnc";
    case EvidenceReason::Semismooth: return "Semismooth";
    case EvidenceReason::FedderScan: return "FedderScan";
    case EvidenceReason::Product: return "Product";
  }
  return "?";
}

std::string to_string(SlcEvidence evidence) { return evidence == SlcEvidence::Yes ? "Yes" : "Unknown"; }

namespace {

std::string describe_reason(const DuBoisEvidence& e) {
  switch (*e.reason()) {
    case EvidenceReason::FedderScan: return "FedderScan(" + std::to_string(*e.prime_bound()) + ")";
    case EvidenceReason::Product: return "Product(" + describe_reason(*e.left()) + ", " + describe_reason(*e.right()) + ")";
    default: return to_string(*e.reason());
  }
}

}  // namespace

std::string DuBoisEvidence::describe() const {
  return is_yes() ? "Yes(" + describe_reason(*this) + ")" : "Unknown";
}

}  // namespace dubois::gsnc
