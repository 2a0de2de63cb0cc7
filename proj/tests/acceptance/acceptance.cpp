// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "dubois/birational.hpp"
#include "dubois/catalog.hpp"
#include "dubois/expression.hpp"
#include "dubois/frobenius.hpp"
#include "dubois/gsnc.hpp"
#include "dubois/primes.hpp"
#include "dubois/report.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dubois;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Monomial uniform_power(std::size_t num_vars, Exponent e) { return Monomial(std::vector<Exponent>(num_vars, e)); }

Outcome battery() {
  const auto start = Clock::now();
  const auto f1b = catalog::case1b(5).polynomial;
  const auto t1b = Clock::now();
  const bool single = frobenius_power_test(f1b, 13).passes;
  const double one_cell = seconds_since(t1b);

  report::BatteryOptions options;
  options.n = 5;
  options.primes = primes_in_range(5, 13);
  const auto r = report::run_battery(options);
  const double total = seconds_since(start);

  std::ostringstream d;
  d << r.summary.cases_run << "/8 cases, ";
  if (!r.summary.all_pass) {
    d << "failing:";
    for (const auto& [label, p] : r.summary.failures) d << " " << label << "@" << p;
    d << ", ";
  }
  d << "1b@13 " << one_cell << "s, total " << total << "s";
  return {single && r.summary.all_pass && r.summary.cases_run == 8 && one_cell < 60.0 && total < 300.0, d.str()};
}

Outcome normal_crossing() {
  const auto f = catalog::case0(6, 5).polynomial;
  std::size_t checked = 0;
  for (auto p : primes_in_range(2, 31)) {
    const auto v = frobenius_power_test(f, p);
    if (!v.passes || !v.witness || *v.witness != uniform_power(6, static_cast<Exponent>(p - 1))) {
      return {false, "mismatch at p = " + std::to_string(p)};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " primes, witness (x1...x6)^(p-1)"};
}

Outcome cusp() {
  const auto f = parse_poly("x2^2 - x1^3", default_variable_names(2));
  for (auto p : primes_in_range(2, 31)) {
    if (frobenius_power_test(f, p).passes) return {false, "passes at p = " + std::to_string(p)};
  }
  for (std::uint64_t p : {2, 3, 5}) {
    if (testing::naive_fedder(f, p).passes) return {false, "naive oracle passes at p = " + std::to_string(p)};
  }
  return {true, "fails for all p <= 31, naive oracle agrees at 2, 3, 5"};
}

Outcome random_agreement() {
  testing::Rng rng(20240601);
  const testing::PolySpec spec{3, 4, 4, 3};
  int polys = 0;
  for (; polys < 250; ++polys) {
    const auto f = testing::random_nonzero_poly(rng, spec);
    for (std::uint64_t p : {2, 3, 5}) {
      if (frobenius_power_test(f, p) != testing::naive_fedder(f, p)) {
        return {false, "disagreement on " + to_string(f) + " at p = " + std::to_string(p)};
      }
    }
  }
  return {true, std::to_string(polys) + " polynomials x 3 primes"};
}

Outcome slc_threshold() {
  const auto high = slc_obstruction_from_multiplicity(32, 30);
  const auto edge = slc_obstruction_from_multiplicity(31, 30);
  const bool ok = high.verdict == SlcVerdict::NotSLC && high.discrepancy_coefficient == -2 &&
                  edge.verdict == SlcVerdict::Inconclusive && edge.discrepancy_coefficient == -1;
  return {ok, "mu=32: " + report::to_string(high.verdict) + " a=" + std::to_string(high.discrepancy_coefficient) +
                  "; mu=31: " + report::to_string(edge.verdict) +
                  " a=" + std::to_string(edge.discrepancy_coefficient)};
}

Outcome multiplicity_properties() {
  testing::Rng rng(20240602);
  const testing::PolySpec spec{3, 4, 3, 3};
  int triples = 0;
  for (; triples < 220; ++triples) {
    const auto g = testing::random_nonzero_poly(rng, spec);
    const auto h = testing::random_nonzero_poly(rng, spec);
    const Point a = testing::random_point(rng, 3, 2, triples % 2 == 0);
    const auto b = testing::random_integer_point(rng, 3, 2);
    Point ab = a;
    for (std::size_t i = 0; i < 3; ++i) ab[i] += Rational(b[i]);
    const auto mu_g = multiplicity_at(g, a).mu;
    if (multiplicity_at(translate(g, std::span<const Integer>(b)), a).mu != multiplicity_at(g, ab).mu) {
      return {false, "translation invariance fails for " + to_string(g)};
    }
    if (multiplicity_at(g * h, a).mu != mu_g + multiplicity_at(h, a).mu) {
      return {false, "multiplicativity fails for " + to_string(g) + " and " + to_string(h)};
    }
  }
  std::ostringstream d;
  d << triples << " triples; mu at origin:";
  for (const auto& label : catalog::battery_labels()) {
    const auto mu = multiplicity_at(catalog::make_case(label, 5).polynomial, Point(6, Rational(0))).mu;
    if (mu > 6) return {false, "case " + label + " has mu = " + std::to_string(mu)};
    d << " " << label << "=" << mu;
  }
  return {true, d.str()};
}

Outcome gsnc_products() {
  testing::Rng rng(20240603);
  auto random_presentation = [&](std::size_t ambient) {
    std::vector<gsnc::CoordinateIdeal> components;
    const long count = testing::uniform(rng, 1, 3);
    for (long c = 0; c < count; ++c) {
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < ambient; ++i) {
        if (testing::uniform(rng, 0, 1) == 1) vars.push_back(i);
      }
      if (vars.empty()) vars.push_back(static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(ambient) - 1)));
      components.emplace_back(std::move(vars));
    }
    return gsnc::GsncPresentation(ambient, std::move(components));
  };
  int pairs = 0;
  for (; pairs < 120; ++pairs) {
    const auto a = random_presentation(static_cast<std::size_t>(testing::uniform(rng, 1, 3)));
    const auto b = random_presentation(static_cast<std::size_t>(testing::uniform(rng, 1, 3)));
    if (!gsnc::product_identity_check(a, b, 6)) return {false, "identity fails on pair " + std::to_string(pairs)};
  }
  return {true, std::to_string(pairs) + " pairs at degree <= 6"};
}

Outcome pinch_rank_drop() {
  const auto fx = catalog::pinch_normalization_fixture();
  const Point origin(2, Rational(0));
  const auto r = jacobian_rank_at(fx.map, origin);
  const auto mu = multiplicity_at(catalog::pinch(2).polynomial, Point(3, Rational(0))).mu;
  const bool ok = r.jacobian_rank == 1 && r.drop == 1 && r.multiplicity_lower_bound == 2 &&
                  Integer(static_cast<unsigned long>(mu)) >= r.multiplicity_lower_bound && mu == 2;
  return {ok, "rank " + std::to_string(r.jacobian_rank) + ", drop " + std::to_string(r.drop) + ", bound " +
                  r.multiplicity_lower_bound.get_str() + ", pinch mu " + std::to_string(mu)};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, battery},          {2, normal_crossing},         {3, cusp},          {4, random_agreement},
      {5, slc_threshold},    {6, multiplicity_properties}, {7, gsnc_products}, {8, pinch_rank_drop},
  };
  int failures = 0;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
