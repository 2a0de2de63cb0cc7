// Command-line front end: Fedder prime scans, multiplicity and slc
// obstruction checks, and the generic-projection case battery.
//
// Exit codes: 0 success, 1 parse error, 2 precondition violation,
// 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dubois/birational.hpp"
#include "dubois/errors.hpp"
#include "dubois/expression.hpp"
#include "dubois/frobenius.hpp"
#include "dubois/primes.hpp"
#include "dubois/report.hpp"

namespace {

using namespace dubois;

enum ExitCode { kOk = 0, kParse = 1, kPrecondition = 2, kInternal = 3 };

struct PolyArgs {
  std::string poly;
  std::string poly_file;
  std::string vars;
};

void add_poly_options(CLI::App* cmd, PolyArgs& args, bool required = true) {
  auto* group = cmd->add_option_group("polynomial");
  group->add_option("--poly", args.poly, "Polynomial expression, e.g. \"x1*x2^2 - x3^2\"");
  group->add_option("--poly-file", args.poly_file, "File holding one polynomial expression");
  if (required) group->require_option(1);
  else group->require_option(0, 1);
  cmd->add_option("--vars", args.vars, "Comma-separated variable names, in order")->required(required);
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ParseError("empty variable name in --vars");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw ParseError("--vars is empty");
  return out;
}

std::string read_poly_text(const PolyArgs& args) {
  if (args.poly_file.empty()) return args.poly;
  std::ifstream in(args.poly_file);
  if (!in) throw PreconditionError("cannot read " + args.poly_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

Point parse_point(const std::string& text) {
  Point point;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    Rational q;
    if (item.empty() || q.set_str(item, 10) != 0) throw ParseError("bad coordinate '" + item + "'", offset);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + item + "'", offset);
    q.canonicalize();
    point.push_back(q);
    offset += item.size() + 1;
  }
  if (point.empty()) throw ParseError("empty point");
  return point;
}

void emit(const std::string& format, const report::Json& json, const std::string& text) {
  std::cout << (format == "json" ? report::dump(json) : text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tests for Du Bois and semi log canonical hypersurface singularities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(report::kToolVersion));

  std::string format = "text";
  unsigned workers = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
  };

  // fedder
  PolyArgs fedder_poly;
  std::string fedder_primes;
  std::uint64_t fedder_floor = 0;
  bool fedder_split = false;
  auto* fedder = app.add_subcommand("fedder", "Scan primes p for f^(p-1) outside (x1^p, ..., xN^p)");
  add_poly_options(fedder, fedder_poly);
  fedder->add_option("--primes", fedder_primes, "Primes: list \"2,3,5\" or inclusive range \"2..50\"")->required();
  fedder->add_option("--floor", fedder_floor, "Ignore primes below this bound in the conclusion");
  fedder->add_flag("--split", fedder_split, "Test disjoint-variable factors separately");
  add_common(fedder);

  // mult
  PolyArgs mult_poly;
  std::string mult_point;
  bool mult_cross_check = false;
  std::uint64_t seed = 20240531;
  auto* mult = app.add_subcommand("mult", "Multiplicity of a hypersurface at a point");
  add_poly_options(mult, mult_poly);
  mult->add_option("--point", mult_point, "Comma-separated exact rationals, e.g. 0,1/2,-3")->required();
  mult->add_flag("--cross-check", mult_cross_check, "Confirm against random-line intersection multiplicity");
  mult->add_option("--seed", seed, "Seed for randomized cross-checks");
  add_common(mult);

  // slc
  PolyArgs slc_poly;
  std::string slc_point;
  std::uint64_t ambient_dim = 0;
  std::uint64_t slc_mu = 0;
  auto* slc = app.add_subcommand("slc", "Blow-up discrepancy obstruction to semi log canonicity");
  add_poly_options(slc, slc_poly, false);
  slc->add_option("--point", slc_point, "Comma-separated exact rationals");
  slc->add_option("--ambient-dim", ambient_dim, "n, for a hypersurface in P^(n+1)")->required();
  auto* mu_opt = slc->add_option("--mu", slc_mu, "Use this multiplicity instead of computing one");
  add_common(slc);

  // battery
  std::size_t battery_n = 5;
  std::string battery_primes = "5..13";
  std::vector<std::string> battery_cases;
  std::optional<std::size_t> battery_d;
  std::uint64_t battery_floor = 0;
  auto* battery = app.add_subcommand("battery", "Run the generic-projection singularity battery");
  battery->add_option("--n", battery_n, "Target dimension n (variables x1..x(n+1))");
  battery->add_option("--primes", battery_primes, "Primes: list or inclusive range");
  battery->add_option("--case", battery_cases, "Restrict to case labels (repeatable)");
  battery->add_option("--d", battery_d, "Sheet count for case 0 (default n + 1)");
  battery->add_option("--floor", battery_floor, "Ignore primes below this bound in conclusions");
  add_common(battery);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*fedder) {
      const auto names = split_names(fedder_poly.vars);
      const auto text = read_poly_text(fedder_poly);
      const Polynomial f = parse_poly(text, names);
      const auto primes = parse_prime_spec(fedder_primes);
      ScanOptions options{fedder_floor, fedder_split, workers};
      const auto scan = scan_primes(f, primes, options, to_string(f, names));
      emit(format, report::to_json(scan, {text, names, fedder_primes}, options), report::to_text(scan, names));
    } else if (*mult) {
      const auto names = split_names(mult_poly.vars);
      const auto text = read_poly_text(mult_poly);
      const Polynomial f = parse_poly(text, names);
      const Point point = parse_point(mult_point);
      const auto result = multiplicity_at(f, point);
      if (mult_cross_check) {
        const auto line = random_line_multiplicity(f, point, seed);
        if (line != result.mu) {
          throw InvariantError("random-line multiplicity " + std::to_string(line) + " != " +
                               std::to_string(result.mu));
        }
      }
      emit(format, report::to_json(result, text, names),
           "mu = " + std::to_string(result.mu) + " at (" + report::point_to_string(point) + ")\n");
    } else if (*slc) {
      SlcObstruction result;
      Point point;
      std::string text;
      std::vector<std::string> names;
      if (*mu_opt) {
        if (!slc_poly.poly.empty() || !slc_poly.poly_file.empty()) {
          throw PreconditionError("give either --mu or a polynomial, not both");
        }
        result = slc_obstruction_from_multiplicity(slc_mu, ambient_dim);
      } else {
        if (slc_poly.vars.empty() || slc_point.empty() || (slc_poly.poly.empty() && slc_poly.poly_file.empty())) {
          throw PreconditionError("slc needs --poly/--poly-file, --vars and --point, or --mu");
        }
        names = split_names(slc_poly.vars);
        text = read_poly_text(slc_poly);
        point = parse_point(slc_point);
        result = slc_obstruction(parse_poly(text, names), point, ambient_dim);
      }
      emit(format, report::to_json(result, point, text, names),
           "mu = " + std::to_string(result.mu) + ", n = " + std::to_string(result.ambient_n) +
               ", discrepancy n - mu = " + std::to_string(result.discrepancy_coefficient) + ", verdict " +
               report::to_string(result.verdict) + "\n");
    } else if (*battery) {
      report::BatteryOptions options;
      options.n = battery_n;
      options.primes = parse_prime_spec(battery_primes);
      options.cases = battery_cases;
      options.case0_sheets = battery_d;
      options.floor = battery_floor;
      options.workers = workers;
      const auto result = report::run_battery(options);
      emit(format, report::to_json(result), report::to_text(result));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
