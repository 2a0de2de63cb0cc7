#include "dubois/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "dubois/catalog.hpp"
#include "dubois/errors.hpp"
#include "dubois/expression.hpp"
#include "dubois/parallel.hpp"
#include "dubois/primes.hpp"

namespace dubois::report {
namespace {

std::string conclusion_kind(const ScanConclusion& c) {
  return c.kind == ScanConclusionKind::DuBoisEvidence ? "DuBoisEvidence" : "NoEvidence";
}

Json conclusion_json(const ScanConclusion& c) {
  Json j;
  j["kind"] = conclusion_kind(c);
  if (c.kind == ScanConclusionKind::DuBoisEvidence) {
    j["prime_bound"] = c.prime_bound;
  } else {
    j["failing_primes"] = c.failing_primes;
  }
  return j;
}

Json verdict_json(const FedderVerdict& v, const std::vector<std::string>& names) {
  Json j;
  j["prime"] = v.prime;
  j["passes"] = v.passes;
  j["witness"] = v.witness ? Json(to_string(*v.witness, names)) : Json(nullptr);
  return j;
}

Json obstruction_json(const SlcObstruction& o) {
  Json j;
  j["mu"] = o.mu;
  j["ambient_n"] = o.ambient_n;
  j["discrepancy_coefficient"] = o.discrepancy_coefficient;
  j["verdict"] = to_string(o.verdict);
  return j;
}

std::string conclusion_text(const ScanConclusion& c) {
  if (c.kind == ScanConclusionKind::DuBoisEvidence) {
    return "Du Bois evidence up to p = " + std::to_string(c.prime_bound);
  }
  std::string s = "no evidence";
  if (!c.failing_primes.empty()) {
    s += " (fails at";
    for (auto p : c.failing_primes) s += " " + std::to_string(p);
    s += ")";
  }
  return s;
}

struct Cell {
  std::size_t row;
  std::size_t factor;
  std::uint64_t prime;
};

}  // namespace

std::string to_string(SlcVerdict verdict) { return verdict == SlcVerdict::NotSLC ? "NotSLC" : "Inconclusive"; }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string point_to_string(const Point& point) {
  std::string s;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) s += ',';
    s += to_string(point[i]);
  }
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

BatteryReport run_battery(const BatteryOptions& options) {
  if (options.primes.empty()) throw PreconditionError("battery needs at least one prime");
  for (auto p : options.primes) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  }
  BatteryReport report;
  report.options = options;
  std::sort(report.options.primes.begin(), report.options.primes.end());
  report.options.primes.erase(std::unique(report.options.primes.begin(), report.options.primes.end()),
                              report.options.primes.end());
  const auto& primes = report.options.primes;
  const std::size_t n = options.n;

  // Requested labels, reported in catalog order.
  std::vector<std::string> labels;
  for (const auto& label : catalog::all_labels()) {
    const bool wanted = options.cases.empty()
                            ? std::find(catalog::battery_labels().begin(), catalog::battery_labels().end(),
                                        label) != catalog::battery_labels().end()
                            : std::find(options.cases.begin(), options.cases.end(), label) != options.cases.end();
    if (wanted) labels.push_back(label);
  }
  for (const auto& label : options.cases) {
    if (std::find(catalog::all_labels().begin(), catalog::all_labels().end(), label) ==
        catalog::all_labels().end()) {
      throw PreconditionError("unknown catalog case '" + label + "'");
    }
  }

  std::vector<catalog::CatalogCase> cases;
  std::vector<std::vector<Polynomial>> factors;
  std::vector<std::size_t> row_of_case;
  for (const auto& label : labels) {
    BatteryRow row;
    row.label = label;
    const std::optional<std::size_t> d = label == "0" ? std::optional(options.case0_sheets.value_or(n + 1))
                                                      : std::nullopt;
    const std::size_t min_n = catalog::min_n_for(label, d);
    if (n < min_n) {
      row.skipped = "n = " + std::to_string(n) + " is below the minimum n = " + std::to_string(min_n);
      report.rows.push_back(std::move(row));
      continue;
    }
    auto c = catalog::make_case(label, n, d);
    row.citation = c.citation;
    row_of_case.push_back(report.rows.size());
    report.rows.push_back(std::move(row));
    factors.push_back(disjoint_factor_split(c.polynomial));
    cases.push_back(std::move(c));
  }

  std::vector<Cell> cells;
  for (std::size_t r = 0; r < cases.size(); ++r) {
    for (std::size_t f = 0; f < factors[r].size(); ++f) {
      for (auto p : primes) cells.push_back({r, f, p});
    }
  }
  const auto verdicts = parallel_map<FedderVerdict>(
      cells.size(), [&](std::size_t i) { return frobenius_power_test(factors[cells[i].row][cells[i].factor], cells[i].prime); },
      options.workers);

  for (std::size_t r = 0; r < cases.size(); ++r) {
    const auto& c = cases[r];
    BatteryRow& row = report.rows[row_of_case[r]];
    const auto names = default_variable_names(c.polynomial.num_vars());
    row.polynomial = to_string(c.polynomial, names);
    for (const auto& g : factors[r]) row.factors.push_back(to_string(g, names));

    // Cells for row r are contiguous: factor-major, then prime.
    const std::size_t first = static_cast<std::size_t>(
        std::find_if(cells.begin(), cells.end(), [&](const Cell& cell) { return cell.row == r; }) - cells.begin());
    std::vector<std::vector<FedderVerdict>> per_factor(factors[r].size());
    for (std::size_t f = 0; f < factors[r].size(); ++f) {
      for (std::size_t k = 0; k < primes.size(); ++k) per_factor[f].push_back(verdicts[first + f * primes.size() + k]);
    }
    for (std::size_t k = 0; k < primes.size(); ++k) {
      FedderVerdict combined{primes[k], true, Monomial::one(c.polynomial.num_vars())};
      for (std::size_t f = 0; f < factors[r].size(); ++f) {
        const auto& v = per_factor[f][k];
        if (!v.passes) {
          combined = FedderVerdict{primes[k], false, std::nullopt};
          break;
        }
        combined.witness = *combined.witness * *v.witness;
      }
      row.verdicts.push_back(combined);
    }
    row.conclusion = conclude(row.verdicts, options.floor);

    const Point origin(c.polynomial.num_vars(), Rational(0));
    row.multiplicity_at_origin = multiplicity_at(c.polynomial, origin).mu;
    row.obstruction = slc_obstruction(c.polynomial, origin, n);

    // Each disjoint factor is its own variety; the product combinator
    // assembles the whole from per-factor scan evidence.
    std::optional<gsnc::DuBoisEvidence> evidence;
    for (std::size_t f = 0; f < factors[r].size(); ++f) {
      const auto factor_conclusion = conclude(per_factor[f], options.floor);
      auto e = gsnc::du_bois_from_fedder_scan(factor_conclusion.kind == ScanConclusionKind::DuBoisEvidence,
                                              factor_conclusion.prime_bound);
      evidence = evidence ? gsnc::du_bois_product(*evidence, e) : e;
    }
    row.du_bois_evidence = evidence->describe();
    row.du_bois_yes = evidence->is_yes();
    row.slc_evidence = gsnc::slc_from_du_bois(true, *evidence);
    if (row.du_bois_yes != (row.conclusion.kind == ScanConclusionKind::DuBoisEvidence)) {
      throw InvariantError("factor-wise evidence disagrees with the combined scan for case " + row.label);
    }
  }

  auto& s = report.summary;
  for (const auto& row : report.rows) {
    if (row.skipped) {
      ++s.cases_skipped;
      continue;
    }
    ++s.cases_run;
    for (const auto& v : row.verdicts) {
      if (!v.passes) {
        s.all_pass = false;
        s.failures.emplace_back(row.label, v.prime);
      }
    }
    if (row.obstruction.verdict == SlcVerdict::NotSLC) ++s.not_slc;
    if (row.du_bois_yes) ++s.du_bois_yes;
    if (row.slc_evidence == gsnc::SlcEvidence::Yes) ++s.slc_yes;
  }
  return report;
}

Json to_json(const BatteryReport& report) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  Json echo;
  echo["command"] = "battery";
  echo["n"] = report.options.n;
  echo["primes"] = report.options.primes;
  echo["cases"] = report.options.cases;
  if (report.options.case0_sheets) echo["case0_sheets"] = *report.options.case0_sheets;
  echo["floor"] = report.options.floor;
  j["input_echo"] = echo;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["case"] = row.label;
    if (row.skipped) {
      r["skipped"] = *row.skipped;
      rows.push_back(r);
      continue;
    }
    r["citation"] = row.citation;
    r["polynomial"] = row.polynomial;
    r["factors"] = row.factors;
    const auto names = default_variable_names(report.options.n + 1);
    Json fedder = Json::array();
    for (const auto& v : row.verdicts) fedder.push_back(verdict_json(v, names));
    r["fedder"] = fedder;
    r["fedder_conclusion"] = conclusion_json(row.conclusion);
    r["multiplicity_at_origin"] = row.multiplicity_at_origin;
    r["slc_obstruction"] = obstruction_json(row.obstruction);
    r["du_bois_evidence"] = row.du_bois_evidence;
    r["slc_evidence"] = gsnc::to_string(row.slc_evidence);
    rows.push_back(r);
  }
  j["rows"] = rows;
  const auto& s = report.summary;
  Json summary;
  summary["cases_run"] = s.cases_run;
  summary["cases_skipped"] = s.cases_skipped;
  summary["all_pass"] = s.all_pass;
  Json failures = Json::array();
  for (const auto& [label, p] : s.failures) failures.push_back(Json{{"case", label}, {"prime", p}});
  summary["failures"] = failures;
  summary["not_slc"] = s.not_slc;
  summary["du_bois_yes"] = s.du_bois_yes;
  summary["slc_yes"] = s.slc_yes;
  j["summary"] = summary;
  return j;
}

std::string to_text(const BatteryReport& report) {
  std::ostringstream out;
  out << "battery n=" << report.options.n << " primes=";
  for (std::size_t i = 0; i < report.options.primes.size(); ++i) {
    out << (i ? "," : "") << report.options.primes[i];
  }
  out << "\n\n";
  for (const auto& row : report.rows) {
    out << "case " << row.label;
    if (row.skipped) {
      out << ": skipped (" << *row.skipped << ")\n\n";
      continue;
    }
    out << ": " << row.citation << "\n";
    out << "  f = " << row.polynomial << "\n";
    if (row.factors.size() > 1) {
      out << "  factors:";
      for (const auto& g : row.factors) out << " [" << g << "]";
      out << "\n";
    }
    out << "  fedder:";
    for (const auto& v : row.verdicts) out << " p=" << v.prime << (v.passes ? ":pass" : ":FAIL");
    out << "\n  conclusion: " << conclusion_text(row.conclusion) << "\n";
    out << "  mu(origin) = " << row.multiplicity_at_origin
        << ", discrepancy n - mu = " << row.obstruction.discrepancy_coefficient << ", slc obstruction "
        << to_string(row.obstruction.verdict) << "\n";
    out << "  du bois: " << row.du_bois_evidence << ", slc: " << gsnc::to_string(row.slc_evidence) << "\n\n";
  }
  const auto& s = report.summary;
  out << "summary: " << s.cases_run << " run, " << s.cases_skipped << " skipped, "
      << (s.all_pass ? "all pass" : std::to_string(s.failures.size()) + " failing cells") << ", " << s.du_bois_yes
      << " du bois yes, " << s.slc_yes << " slc yes, " << s.not_slc << " not slc\n";
  return out.str();
}

Json to_json(const FedderScanReport& report, const FedderInput& input, const ScanOptions& options) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  Json echo;
  echo["command"] = "fedder";
  echo["poly"] = input.poly_text;
  echo["vars"] = input.variables;
  echo["primes"] = input.prime_spec;
  echo["floor"] = options.floor;
  echo["split_factors"] = options.split_factors;
  j["input_echo"] = echo;
  Json rows = Json::array();
  for (const auto& v : report.verdicts) rows.push_back(verdict_json(v, input.variables));
  j["rows"] = rows;
  Json summary;
  summary["polynomial"] = report.polynomial_id;
  summary["failing_primes"] = report.failing_primes;
  summary["characteristic_two_scanned"] = report.characteristic_two_scanned;
  summary["conclusion"] = conclusion_json(report.conclusion);
  j["summary"] = summary;
  return j;
}

std::string to_text(const FedderScanReport& report, const std::vector<std::string>& variables) {
  std::ostringstream out;
  out << "f = " << report.polynomial_id << "\n";
  out << std::left << std::setw(8) << "prime" << std::setw(8) << "passes" << "witness\n";
  for (const auto& v : report.verdicts) {
    out << std::setw(8) << v.prime << std::setw(8) << (v.passes ? "yes" : "no")
        << (v.witness ? to_string(*v.witness, variables) : std::string("-")) << "\n";
  }
  if (report.characteristic_two_scanned) out << "note: p = 2 scanned; characteristic 2 is reported but unvetted\n";
  out << "conclusion: " << conclusion_text(report.conclusion) << "\n";
  return out.str();
}

Json to_json(const MultiplicityReport& report, const std::string& poly_text,
             const std::vector<std::string>& variables) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["input_echo"] = Json{{"command", "mult"}, {"poly", poly_text}, {"vars", variables},
                         {"point", point_to_string(report.point)}};
  j["rows"] = Json::array({Json{{"point", point_to_string(report.point)}, {"mu", report.mu}}});
  j["summary"] = Json{{"mu", report.mu}, {"on_hypersurface", report.mu >= 1}, {"singular", report.mu >= 2}};
  return j;
}

Json to_json(const SlcObstruction& obstruction, const Point& point, const std::string& poly_text,
             const std::vector<std::string>& variables) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["input_echo"] = Json{{"command", "slc"},
                         {"poly", poly_text},
                         {"vars", variables},
                         {"point", point_to_string(point)},
                         {"ambient_dim", obstruction.ambient_n}};
  j["rows"] = Json::array({obstruction_json(obstruction)});
  j["summary"] = Json{{"verdict", to_string(obstruction.verdict)},
                      {"discrepancy_coefficient", obstruction.discrepancy_coefficient}};
  return j;
}

}  // namespace dubois::report
