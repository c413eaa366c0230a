#include "suq2/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "suq2/errors.hpp"
#include "suq2/geometry.hpp"
#include "suq2/gns.hpp"
#include "suq2/ktheory.hpp"
#include "suq2/suites.hpp"

namespace suq2::cli {

namespace {

using qalgebra::AlgebraElement;
using qalgebra::Generator;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

Json config_snapshot(const RunConfig& cfg, int twolmax) {
  Json j;
  j["q"] = cfg.q;
  j["twolmax"] = twolmax;
  j["tolerance"] = cfg.tolerance;
  j["decay_threshold"] = cfg.decay_threshold;
  j["seed"] = cfg.seed;
  return j;
}

Generator parse_generator(const std::string& s) {
  for (Generator g : qalgebra::kGenerators)
    if (s == qalgebra::name(g)) return g;
  throw ParseError("unknown generator '" + s + "' (expected alpha, alphaStar, gamma or gammaStar)");
}

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("range must look like a..b, got '" + s + "'");
  const int a = std::stoi(m[1]), b = std::stoi(m[2]);
  if (a > b) throw ParseError("empty range '" + s + "'");
  return {a, b};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string checks_csv(const Report& r) {
  std::ostringstream os;
  os << "name,pass,measured,expected\n";
  for (const auto& c : r.checks)
    os << csv_field(c.name) << "," << (c.pass ? "true" : "false") << ","
       << csv_field(c.measured.is_string() ? c.measured.get<std::string>() : c.measured.dump()) << ","
       << csv_field(c.expected) << "\n";
  return os.str();
}

geometry::DecayOptions decay_options(const RunConfig& cfg) {
  geometry::DecayOptions o;
  o.twolmax = cfg.twolmax.value_or(kDefaultDecayTwolmax);
  o.cutoffs = cfg.cutoffs;
  o.decay_threshold = cfg.decay_threshold;
  return o;
}

Report run_commutators(const RunConfig& cfg) {
  const auto opts = decay_options(cfg);
  Report r;
  r.command = "commutators";
  r.params = config_snapshot(cfg, opts.twolmax);
  r.params["cutoffs"] = opts.cutoffs;
  std::vector<AlgebraElement> xs;
  std::vector<std::string> labels;
  if (!cfg.element.empty()) {
    xs.push_back(AlgebraElement::parse(cfg.element));
    labels.push_back("element");
  } else {
    xs = geometry::podles_generators();
    labels = {"gamma* gamma", "alpha gamma*", "gamma alpha*"};
  }
  for (std::size_t k = 0; k < xs.size(); ++k)
    r.merge(geometry::commutator_decay(xs[k], cfg.q, opts), labels[k]);
  return r;
}

Report run_drinfeld(const RunConfig& cfg) {
  const auto opts = decay_options(cfg);
  Report r;
  r.command = "drinfeld-commutators";
  r.params = config_snapshot(cfg, opts.twolmax);
  r.params["cutoffs"] = opts.cutoffs;
  std::vector<Generator> gens(qalgebra::kGenerators.begin(), qalgebra::kGenerators.end());
  if (!cfg.generator.empty()) gens = {parse_generator(cfg.generator)};
  for (Generator g : gens)
    r.merge(geometry::drinfeld_commutator_decay(g, cfg.q, opts), std::string(qalgebra::name(g)));
  return r;
}

}  // namespace

void validate(const RunConfig& cfg) {
  require_q_in_open_unit_interval(cfg.q);
  if (cfg.twolmax && *cfg.twolmax < 4) throw CutoffTooSmall("twolmax must be at least 4");
  if (!(cfg.tolerance > 0.0)) throw Error("tolerance must be positive");
  if (!(cfg.decay_threshold > 0.0)) throw Error("decay threshold must be positive");
  for (double q : cfg.qs) require_q_in_open_unit_interval(q);
  if (cfg.degree < 0) throw Error("degree must be nonnegative");
  if (cfg.kmin > cfg.kmax || cfg.lmin > cfg.lmax) throw Error("empty index range");
  if (cfg.mmax < 0) throw Error("mmax must be nonnegative");
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"check-hopf", "check-relations", "haar",     "spectrum",
                                                 "commutators", "drinfeld-commutators", "index-table",
                                                 "duality",    "ds-double",       "q-grid"};
  return names;
}

Outcome run(const std::string& command, const RunConfig& cfg) {
  validate(cfg);
  const int twolmax = cfg.twolmax.value_or(kDefaultTwolmax);
  Outcome out;
  Report& r = out.report;
  if (command == "check-hopf") {
    r = suites::check_hopf(cfg.degree);
  } else if (command == "check-relations") {
    r = gns::verify_relations(gns::TruncatedSpace(twolmax), cfg.q, cfg.tolerance);
  } else if (command == "haar") {
    suites::HaarSuiteOptions o;
    o.q = cfg.q;
    o.cutoff = twolmax;
    o.tol = cfg.tolerance;
    o.seed = cfg.seed;
    if (!cfg.element.empty()) o.element = AlgebraElement::parse(cfg.element);
    r = suites::haar_suite(o);
  } else if (command == "spectrum") {
    r = geometry::spectrum_report(gns::TruncatedSpace(twolmax), cfg.q, cfg.tolerance);
  } else if (command == "commutators") {
    r = run_commutators(cfg);
  } else if (command == "drinfeld-commutators") {
    r = run_drinfeld(cfg);
  } else if (command == "index-table") {
    ktheory::PairingTable table;
    r = ktheory::index_table_report(cfg.kmin, cfg.kmax, cfg.lmin, cfg.lmax, twolmax, cfg.q, &table);
    out.csv = table.to_csv();
  } else if (command == "duality") {
    r = ktheory::verify_pd_unit_counit(cfg.amin, cfg.amax);
  } else if (command == "ds-double") {
    r = ktheory::verify_ds_double();
  } else if (command == "q-grid") {
    r = ktheory::q_grid_consistency(cfg.qs, twolmax, cfg.mmax);
  } else {
    throw Error("unknown command '" + command + "'");
  }
  // Keep the command's own parameters and add the run configuration.
  Json params = config_snapshot(cfg, command.find("commutators") != std::string::npos
                                         ? cfg.twolmax.value_or(kDefaultDecayTwolmax)
                                         : twolmax);
  for (const auto& [k, v] : r.params.items()) params[k] = v;
  r.params = params;
  r.command = command;
  return out;
}

std::string render(const Outcome& outcome, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return outcome.report.to_json().dump(2) + "\n";
    case OutputFormat::text: return outcome.report.to_text();
    case OutputFormat::csv: return outcome.csv ? *outcome.csv : checks_csv(outcome.report);
  }
  return {};
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Verification suites for SU_q(2), the Podles sphere and its index pairing", "suq2cli"};
  app.require_subcommand(1);
  app.fallthrough();

  int twolmax = kDefaultTwolmax;
  std::string output = "json";
  std::string arange;
  std::string qs;
  std::string cutoffs;
  auto* twolmax_opt = app.add_option("--cutoff", twolmax, "Truncation level twolmax (2l <= twolmax)");
  app.add_option("--q", cfg.q, "Deformation parameter in (0,1)")->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Absolute tolerance for numerical checks")->capture_default_str();
  app.add_option("--decay-threshold", cfg.decay_threshold, "Threshold on the final commutator tail")
      ->capture_default_str();
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out-file", cfg.out_file, "Write output here instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for randomized sampling")->capture_default_str();

  auto* hopf = app.add_subcommand("check-hopf", "Exact Hopf *-algebra axioms on PBW monomials");
  hopf->add_option("--degree", cfg.degree, "Maximal monomial degree")->capture_default_str();
  app.add_subcommand("check-relations", "Defining relations in the truncated GNS representation");
  auto* haar = app.add_subcommand("haar", "Haar state: modular property, invariance oracle, positivity");
  haar->add_option("--element", cfg.element, "Also evaluate the Haar state on this element");
  app.add_subcommand("spectrum", "Dirac operator spectrum and the phase F");
  auto* comm = app.add_subcommand("commutators", "Tail norms of [F, pi(x)] for the Podles generators");
  comm->add_option("--element", cfg.element, "Use this weight-zero element instead");
  comm->add_option("--cutoffs", cutoffs, "Comma-separated L0 values");
  auto* drin = app.add_subcommand("drinfeld-commutators", "Tail norms of [F, f . -] for the generators");
  drin->add_option("--generator", cfg.generator, "alpha, alphaStar, gamma or gammaStar");
  drin->add_option("--cutoffs", cutoffs, "Comma-separated L0 values");
  auto* table = app.add_subcommand("index-table", "Pairing table [E_k] x [D (x) E_l]");
  table->add_option("--kmin", cfg.kmin)->capture_default_str();
  table->add_option("--kmax", cfg.kmax)->capture_default_str();
  table->add_option("--lmin", cfg.lmin)->capture_default_str();
  table->add_option("--lmax", cfg.lmax)->capture_default_str();
  auto* dual = app.add_subcommand("duality", "Unit and counit identities comp(a) = comp2(a) = z^a");
  dual->add_option("--arange", arange, "Range a..b")->default_str("-5..5");
  app.add_subcommand("ds-double", "The 2x2 duality matrix over R(G_q)");
  auto* grid = app.add_subcommand("q-grid", "Operator index across a grid of q values");
  grid->add_option("--qs", qs, "Comma-separated q values")->default_str("0.3,0.5,0.9");
  grid->add_option("--mmax", cfg.mmax)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (twolmax_opt->count() > 0) cfg.twolmax = twolmax;
    cfg.output = output == "csv" ? OutputFormat::csv : output == "text" ? OutputFormat::text : OutputFormat::json;
    if (!arange.empty()) std::tie(cfg.amin, cfg.amax) = parse_range(arange);
    if (!qs.empty()) {
      cfg.qs.clear();
      for (const auto& s : CLI::detail::split(qs, ',')) cfg.qs.push_back(std::stod(s));
    }
    if (!cutoffs.empty()) {
      cfg.cutoffs.clear();
      for (const auto& s : CLI::detail::split(cutoffs, ',')) cfg.cutoffs.push_back(std::stoi(s));
    }
    const std::string command = app.get_subcommands().front()->get_name();
    const Outcome outcome = run(command, cfg);
    const std::string text = render(outcome, cfg.output);
    if (cfg.out_file.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out_file);
      if (!f) throw Error("cannot open " + cfg.out_file);
      f << text;
    }
    return outcome.report.pass() ? kExitPass : kExitFail;
  } catch (const QOutOfRange& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CutoffTooSmall& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const MarginTooSmall& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: bad number (" << e.what() << ")\n";
    return kExitConfig;
  } catch (const SingularSystem& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const RankDeficient& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace suq2::cli
