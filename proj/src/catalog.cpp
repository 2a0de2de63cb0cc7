#include "dubois/catalog.hpp"

#include <map>

#include "dubois/errors.hpp"

namespace dubois::catalog {
namespace {

const Ring kZZ = Ring::integers();

// Builder for terms written with 1-based variable indices.
class Terms {
 public:
  explicit Terms(std::size_t num_vars) : nvars_(num_vars) {}

  Terms& add(long coeff, std::initializer_list<std::pair<std::size_t, Exponent>> powers) {
    std::vector<Exponent> e(nvars_, 0);
    for (auto [index, power] : powers) e.at(index - 1) += power;
    terms_.emplace_back(Monomial(std::move(e)), Integer(coeff));
    return *this;
  }

  Polynomial build() const { return Polynomial::from_terms(kZZ, nvars_, terms_); }

 private:
  std::size_t nvars_;
  std::vector<std::pair<Monomial, Integer>> terms_;
};

Polynomial var(std::size_t num_vars, std::size_t one_based) {
  return Polynomial::variable(kZZ, num_vars, one_based - 1);
}

// x_s^2 - x_t^2 x_u, the pinch form in Roberts coordinates.
Polynomial pinch_form(std::size_t num_vars, std::size_t s, std::size_t t, std::size_t u) {
  return Terms(num_vars).add(1, {{s, 2}}).add(-1, {{t, 2}, {u, 1}}).build();
}

void require_n(const std::string& label, std::size_t n, std::size_t min_n) {
  if (n < min_n) {
    throw PreconditionError("case " + label + " needs n >= " + std::to_string(min_n) + ", got n = " +
                            std::to_string(n));
  }
}

CatalogCase make(std::string label, std::size_t n, Polynomial f, std::string citation, std::size_t min_n) {
  CatalogCase c;
  c.label = std::move(label);
  c.n = n;
  c.polynomial = std::move(f);
  c.citation = std::move(citation);
  c.min_n = min_n;
  return c;
}

const std::map<std::string, std::size_t>& fixed_min_n() {
  static const std::map<std::string, std::size_t> table{
      {"1a", 2}, {"1b", 4}, {"2a", 3}, {"2b", 5}, {"2c", 5}, {"3", 4}, {"4", 5}, {"dnc", 1}, {"pinch", 2},
  };
  return table;
}

}  // namespace

std::size_t min_n_for(const std::string& label, std::optional<std::size_t> d) {
  if (label == "0") {
    const std::size_t sheets = d.value_or(1);
    return sheets <= 1 ? 1 : sheets - 1;
  }
  auto it = fixed_min_n().find(label);
  if (it == fixed_min_n().end()) throw PreconditionError("unknown catalog case '" + label + "'");
  return it->second;
}

Polynomial cubic_phi_form(std::size_t num_vars, const std::array<std::size_t, 5>& slots) {
  // Slots are 0-based positions here; Terms takes 1-based indices.
  const std::size_t a = slots[0] + 1, b = slots[1] + 1, c = slots[2] + 1, u = slots[3] + 1, v = slots[4] + 1;
  return Terms(num_vars)
      .add(1, {{u, 3}})
      // Phi4
      .add(1, {{a, 2}, {c, 1}, {u, 1}})
      .add(-1, {{a, 3}, {v, 1}})
      .add(2, {{b, 1}, {c, 1}, {u, 2}})
      .add(-3, {{a, 1}, {b, 1}, {u, 1}, {v, 1}})
      // Phi5
      .add(1, {{b, 2}, {c, 2}, {u, 1}})
      .add(-1, {{a, 1}, {b, 2}, {c, 1}, {v, 1}})
      .add(-1, {{b, 3}, {v, 2}})
      .build();
}

CatalogCase case0(std::size_t d, std::size_t n) {
  if (d < 1 || d > n + 1) {
    throw PreconditionError("case 0 needs 1 <= d <= n + 1, got d = " + std::to_string(d) + ", n = " +
                            std::to_string(n));
  }
  const std::size_t nv = n + 1;
  std::vector<Exponent> e(nv, 0);
  for (std::size_t i = 0; i < d; ++i) e[i] = 1;
  CatalogCase c = make("0", n, Polynomial::monomial(kZZ, nv, Monomial(std::move(e))),
                       "Roberts class 0: d smooth sheets in normal crossing, x1*...*xd", min_n_for("0", d));
  c.d = d;
  c.singular = d >= 2;
  return c;
}

CatalogCase case1a(std::size_t n) {
  require_n("1a", n, min_n_for("1a"));
  return make("1a", n, pinch_form(n + 1, n, 1, n + 1), "Roberts class 1a: pinch point xn^2 - x1^2*x(n+1)",
              min_n_for("1a"));
}

CatalogCase case1b(std::size_t n) {
  require_n("1b", n, min_n_for("1b"));
  return make("1b", n, cubic_phi_form(n + 1, {0, 1, 2, n - 1, n}),
              "Roberts class 1b: xn^3 + Phi4 + Phi5 in (x1, x2, x3, xn, x(n+1))", min_n_for("1b"));
}

CatalogCase case2a(std::size_t n) {
  require_n("2a", n, min_n_for("2a"));
  const std::size_t nv = n + 1;
  return make("2a", n, var(nv, 1) * pinch_form(nv, n, 2, n + 1),
              "Roberts class 2a: hyperplane x pinch, x1*(xn^2 - x2^2*x(n+1))", min_n_for("2a"));
}

CatalogCase case2b(std::size_t n) {
  require_n("2b", n, min_n_for("2b"));
  const std::size_t nv = n + 1;
  return make("2b", n, var(nv, 1) * cubic_phi_form(nv, {1, 2, 3, n - 1, n}),
              "Roberts class 2b: hyperplane x class 1b, x1*(xn^3 + Psi4 + Psi5)", min_n_for("2b"));
}

CatalogCase case2c(std::size_t n) {
  require_n("2c", n, min_n_for("2c"));
  const std::size_t nv = n + 1;
  return make("2c", n, pinch_form(nv, n, 1, n + 1) * pinch_form(nv, n - 2, 2, n - 1),
              "Roberts class 2c: pinch x pinch, (xn^2 - x1^2*x(n+1))*(x(n-2)^2 - x2^2*x(n-1))", min_n_for("2c"));
}

CatalogCase case3(std::size_t n) {
  require_n("3", n, min_n_for("3"));
  const std::size_t nv = n + 1;
  return make("3", n, var(nv, 1) * var(nv, 2) * pinch_form(nv, n, 3, n + 1),
              "Roberts class 3: two hyperplanes x pinch, x1*x2*(xn^2 - x3^2*x(n+1))", min_n_for("3"));
}

CatalogCase case4(std::size_t n) {
  require_n("4", n, min_n_for("4"));
  const std::size_t nv = n + 1;
  return make("4", n, var(nv, 1) * var(nv, 2) * var(nv, 3) * pinch_form(nv, n, 4, n + 1),
              "Roberts class 4: three hyperplanes x pinch, x1*x2*x3*(xn^2 - x4^2*x(n+1))", min_n_for("4"));
}

CatalogCase double_normal_crossing(std::size_t n) {
  require_n("dnc", n, min_n_for("dnc"));
  const std::size_t nv = n + 1;
  return make("dnc", n, var(nv, 1) * var(nv, 2), "semismooth normal form: double normal crossing x1*x2",
              min_n_for("dnc"));
}

CatalogCase pinch(std::size_t n) {
  require_n("pinch", n, min_n_for("pinch"));
  return make("pinch", n, Terms(n + 1).add(1, {{1, 1}, {2, 2}}).add(-1, {{3, 2}}).build(),
              "semismooth normal form: pinch point x1*x2^2 - x3^2", min_n_for("pinch"));
}

CatalogCase make_case(const std::string& label, std::size_t n, std::optional<std::size_t> d) {
  if (label == "0") return case0(d.value_or(n + 1), n);
  if (d) throw PreconditionError("sheet count d only applies to case 0");
  if (label == "1a") return case1a(n);
  if (label == "1b") return case1b(n);
  if (label == "2a") return case2a(n);
  if (label == "2b") return case2b(n);
  if (label == "2c") return case2c(n);
  if (label == "3") return case3(n);
  if (label == "4") return case4(n);
  if (label == "dnc") return double_normal_crossing(n);
  if (label == "pinch") return pinch(n);
  throw PreconditionError("unknown catalog case '" + label + "'");
}

const std::vector<std::string>& battery_labels() {
  static const std::vector<std::string> labels{"0", "1a", "1b", "2a", "2b", "2c", "3", "4"};
  return labels;
}

const std::vector<std::string>& all_labels() {
  static const std::vector<std::string> labels{"0", "1a", "1b", "2a", "2b", "2c", "3", "4", "dnc", "pinch"};
  return labels;
}

PinchNormalization pinch_normalization_fixture() {
  PinchNormalization fixture;
  fixture.equation = pinch_form(3, 1, 2, 3);
  fixture.map[0] = Terms(2).add(1, {{1, 1}, {2, 1}}).build();
  fixture.map[1] = Terms(2).add(1, {{2, 1}}).build();
  fixture.map[2] = Terms(2).add(1, {{1, 2}}).build();
  fixture.conductor_variables = {0, 1};
  fixture.conductor_preimage_variables = {1};
  return fixture;
}

}  // namespace dubois::catalog
