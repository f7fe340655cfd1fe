#include "mimofbl/cli/runspec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "CLI11.hpp"
#include "mimofbl/cli/csv.hpp"

namespace mimofbl::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

double parse_number(const std::string& text, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty()) {
    throw std::invalid_argument(std::string("sweep: bad ") + what + " '" +
                                text + "'");
  }
  return v;
}

}  // namespace

std::string SweepAxis::to_text() const {
  std::string out = variable;
  out += ":" + format_double(start);
  out += ":" + format_double(stop);
  out += ":" + format_int(points);
  switch (scale) {
    case Scale::Linear: out += ":linear"; break;
    case Scale::Log: out += ":log"; break;
    case Scale::Db: out += ":db"; break;
  }
  return out;
}

SweepAxis parse_sweep(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4 && parts.size() != 5) {
    throw std::invalid_argument(
        "sweep: expected var:start:stop:points[:scale], got '" + text + "'");
  }
  SweepAxis axis;
  axis.variable = parts[0];
  if (axis.variable.empty()) {
    throw std::invalid_argument("sweep: empty variable name");
  }
  axis.start = parse_number(parts[1], "start");
  axis.stop = parse_number(parts[2], "stop");
  axis.points = static_cast<int>(parse_number(parts[3], "points"));
  if (axis.points < 2) {
    throw std::invalid_argument("sweep: need at least 2 points");
  }
  if (!(axis.start < axis.stop)) {
    throw std::invalid_argument("sweep: start must be below stop");
  }
  if (parts.size() == 5) {
    if (parts[4] == "linear") {
      axis.scale = SweepAxis::Scale::Linear;
    } else if (parts[4] == "log") {
      axis.scale = SweepAxis::Scale::Log;
    } else if (parts[4] == "db") {
      axis.scale = SweepAxis::Scale::Db;
    } else {
      throw std::invalid_argument("sweep: unknown scale '" + parts[4] + "'");
    }
  }
  if (axis.scale == SweepAxis::Scale::Log && !(axis.start > 0.0)) {
    throw std::invalid_argument("sweep: log scale needs start > 0");
  }
  return axis;
}

std::vector<double> sweep_values(const SweepAxis& axis) {
  std::vector<double> out;
  out.reserve(axis.points);
  const double span = axis.points - 1.0;
  for (int i = 0; i < axis.points; ++i) {
    const double frac = i / span;
    if (axis.scale == SweepAxis::Scale::Log) {
      out.push_back(std::exp(std::log(axis.start) +
                             frac * (std::log(axis.stop) - std::log(axis.start))));
    } else {
      out.push_back(axis.start + frac * (axis.stop - axis.start));
    }
  }
  out.back() = axis.stop;  // pin the endpoint against rounding drift
  out.front() = axis.start;
  return out;
}

std::vector<int> sweep_integer_values(const SweepAxis& axis) {
  std::vector<int> out;
  for (double v : sweep_values(axis)) {
    const int n = static_cast<int>(std::max(1.0, std::round(v)));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

double RunSpec::snr_linear() const { return std::pow(10.0, snr_db / 10.0); }

SystemConfig RunSpec::system() const { return SystemConfig(tx, rx, snr_linear()); }

KappaPolicy RunSpec::kappa() const {
  if (kappa_policy_text == "tau") return KappaPolicy::tau();
  const std::string prefix = "custom:";
  if (kappa_policy_text.rfind(prefix, 0) == 0) {
    return KappaPolicy::custom(
        parse_number(kappa_policy_text.substr(prefix.size()), "kappa value"));
  }
  throw std::invalid_argument("kappa policy must be 'tau' or 'custom:<log2 kappa>'");
}

namespace {

void validate_kappa_text(const std::string& text) {
  RunSpec probe;
  probe.kappa_policy_text = text;
  probe.kappa();  // throws on bad input
}

struct CommonFlags {
  bool channel = false;   // --tx/--rx/--snr-db
  bool op = false;        // --blocklength/--epsilon
  bool mc = false;        // --trials/--seed
  bool sweep = false;
  bool bounds = false;    // --delta/--kappa-policy/--scheme/--rate-normalization
  bool rate = false;      // --per-link-rate
};

void add_common(CLI::App* sub, RunSpec& spec, std::string& sweep_text,
                const CommonFlags& want) {
  static const std::map<std::string, SchemeSelection> kSchemes{
      {"st", SchemeSelection::St},
      {"td", SchemeSelection::Td},
      {"both", SchemeSelection::Both}};
  static const std::map<std::string, RateNormalization> kNorms{
      {"none", RateNormalization::None},
      {"capacity", RateNormalization::Capacity}};

  if (want.channel) {
    sub->add_option("--tx", spec.tx, "Transmit antennas L")
        ->check(CLI::PositiveNumber);
    sub->add_option("--rx", spec.rx, "Receive antennas N")
        ->check(CLI::PositiveNumber);
    sub->add_option("--snr-db", spec.snr_db, "SNR rho in dB");
  }
  if (want.op) {
    sub->add_option("--blocklength", spec.blocklength,
                    "Channel uses per codeword n")
        ->check(CLI::PositiveNumber);
    sub->add_option("--epsilon", spec.epsilon, "Target block error probability")
        ->check(CLI::Range(0.0, 1.0));
  }
  if (want.mc) {
    sub->add_option("--trials", spec.trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", spec.seed, "Base RNG seed");
  }
  if (want.sweep) {
    sub->add_option("--sweep", sweep_text,
                    "Axis as var:start:stop:points[:scale], scale in "
                    "{linear,log,db}");
  }
  if (want.bounds) {
    sub->add_option("--delta", spec.delta,
                    "Free parameter of the finite converse (> 0)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--kappa-policy", spec.kappa_policy_text,
                    "tau | custom:<log2 kappa>")
        ->check([](const std::string& v) -> std::string {
          try {
            validate_kappa_text(v);
          } catch (const std::exception& e) {
            return e.what();
          }
          return {};
        });
    sub->add_option("--scheme", spec.scheme, "st | td | both")
        ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
    sub->add_option("--rate-normalization", spec.rate_norm,
                    "none | capacity (divide rates by the realization's C)")
        ->transform(CLI::CheckedTransformer(kNorms, CLI::ignore_case));
  }
  if (want.rate) {
    sub->add_option("--per-link-rate", spec.per_link_rate,
                    "Per-link coding rate in bits/use")
        ->check(CLI::NonNegativeNumber);
  }
  sub->add_option("--workers", spec.workers,
                  "Worker threads (never changes output bytes)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", spec.out_path,
                  "Output CSV path; omit to print the CSV to stdout");
  sub->add_option("--label", spec.label, "Series tag recorded in figure CSVs");
  // --config lives on the root app; let it match when typed after the
  // subcommand, and let a [section] in the file address this command.
  sub->fallthrough();
  sub->configurable();
}

}  // namespace

void attach_cli(CLI::App& app, RunSpec& spec) {
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "key = value file; a [section] named after the command "
                 "addresses its flags; command-line flags override the file");
  // sweep text needs to outlive parsing; stash it on the app.
  auto sweep_text = std::make_shared<std::string>();

  static const std::map<std::string, ErgodicReportKind> kReports{
      {"moments", ErgodicReportKind::Moments},
      {"rate", ErgodicReportKind::Rate}};

  auto* bounds = app.add_subcommand(
      "bounds", "Finite-blocklength bounds for one channel draw");
  add_common(bounds, spec, *sweep_text,
             {.channel = true, .op = true, .mc = true, .sweep = true,
              .bounds = true, .rate = false});
  bounds->callback([&spec] { spec.command = Command::Bounds; });

  auto* ergodic = app.add_subcommand(
      "ergodic", "Monte Carlo averages over the channel ensemble");
  add_common(ergodic, spec, *sweep_text,
             {.channel = true, .op = true, .mc = true, .sweep = true,
              .bounds = false, .rate = false});
  ergodic->add_option("--report", spec.report, "moments | rate")
      ->transform(CLI::CheckedTransformer(kReports, CLI::ignore_case));
  ergodic->callback([&spec] { spec.command = Command::Ergodic; });

  auto* compare = app.add_subcommand(
      "compare", "Closed-form ST/TD error probabilities");
  add_common(compare, spec, *sweep_text,
             {.channel = true, .op = true, .mc = false, .sweep = true,
              .bounds = false, .rate = true});
  compare->callback([&spec] { spec.command = Command::Compare; });

  auto* exchange = app.add_subcommand(
      "exchange", "Trade spatial DoF against blocklength at fixed reliability");
  add_common(exchange, spec, *sweep_text,
             {.channel = true, .op = true, .mc = false, .sweep = false,
              .bounds = false, .rate = true});
  exchange->add_option("--solve-for", spec.solve_for, "n | m")
      ->check(CLI::IsMember({"n", "m"}));
  exchange->callback([&spec] { spec.command = Command::Exchange; });

  auto* wishart = app.add_subcommand(
      "wishart-check", "Inverse-trace identity against Monte Carlo");
  add_common(wishart, spec, *sweep_text,
             {.channel = true, .op = false, .mc = true, .sweep = false,
              .bounds = false, .rate = false});
  wishart->callback([&spec] { spec.command = Command::WishartCheck; });

  auto* figure = app.add_subcommand(
      "figure", "Reproduce a named figure dataset from its preset");
  figure->add_option("--id", spec.figure_id, "2a | 2b | 2c | 5 | 6 | 7 | 8")
      ->required();
  figure->add_option("--seed", spec.seed, "Base RNG seed");
  figure->add_option("--workers", spec.workers,
                     "Worker threads (never changes output bytes)")
      ->check(CLI::PositiveNumber);
  figure->add_option("--out", spec.out_path,
                     "Output CSV path; a .gp plot script lands next to it");
  figure->fallthrough();
  figure->configurable();
  figure->callback([&spec] { spec.command = Command::Figure; });

  app.final_callback([&spec, sweep_text] {
    if (!sweep_text->empty()) {
      try {
        spec.sweep = parse_sweep(*sweep_text);
      } catch (const std::exception& e) {
        throw CLI::ValidationError("--sweep", e.what());
      }
    }
  });
}

RunSpec parse_tokens(const std::vector<std::string>& tokens) {
  RunSpec spec;
  CLI::App app{"mimofbl"};
  attach_cli(app, spec);
  std::vector<const char*> argv;
  argv.push_back("mimofbl");
  for (const auto& t : tokens) argv.push_back(t.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw std::runtime_error(std::string("preset parse failure: ") + e.what());
  }
  return spec;
}

}  // namespace mimofbl::cli
