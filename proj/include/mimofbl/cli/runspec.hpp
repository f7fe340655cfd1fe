#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mimofbl/bounds.hpp"
#include "mimofbl/channel.hpp"

namespace CLI {
class App;
}

namespace mimofbl::cli {

enum class Command { Bounds, Ergodic, Compare, Exchange, WishartCheck, Figure };
enum class SchemeSelection { St, Td, Both };
enum class RateNormalization { None, Capacity };
enum class ErgodicReportKind { Moments, Rate };

// One sweep axis, given on the command line as
// var:start:stop:points[:scale] with scale in {linear, log, db}.
struct SweepAxis {
  std::string variable;  // "n" or "snr-db"
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  enum class Scale { Linear, Log, Db } scale = Scale::Linear;

  bool active() const { return points > 0; }
  std::string to_text() const;  // round-trips through parse_sweep
};

SweepAxis parse_sweep(const std::string& text);
std::vector<double> sweep_values(const SweepAxis& axis);
// Rounded to integers, deduplicated, ascending; for blocklength sweeps.
std::vector<int> sweep_integer_values(const SweepAxis& axis);

// Everything one invocation needs. dB-to-linear conversion happens here
// and nowhere else; computation modules only ever see linear SNR.
struct RunSpec {
  Command command = Command::Bounds;
  int tx = 1;
  int rx = 1;
  double snr_db = 10.0;
  int blocklength = 100;
  double epsilon = 1e-3;
  double per_link_rate = 1.0;
  SweepAxis sweep;
  int trials = 10000;
  std::uint64_t seed = 1;
  int workers = 1;
  double delta = 1.0;
  std::string kappa_policy_text = "tau";  // "tau" or "custom:<log2 kappa>"
  std::string out_path;
  SchemeSelection scheme = SchemeSelection::St;
  RateNormalization rate_norm = RateNormalization::None;
  ErgodicReportKind report = ErgodicReportKind::Moments;
  std::string figure_id;
  std::string solve_for = "n";
  std::string label;  // series tag used by figure presets

  double snr_linear() const;
  SystemConfig system() const;
  KappaPolicy kappa() const;
};

// Wires all subcommands and their flags into app, bound to spec. The
// pointers captured by CLI11 reference spec, which must outlive app.
void attach_cli(CLI::App& app, RunSpec& spec);

// Parses a standalone token list (no program name), as used for figure
// preset sub-runs. Throws std::runtime_error on any parse failure.
RunSpec parse_tokens(const std::vector<std::string>& tokens);

}  // namespace mimofbl::cli
