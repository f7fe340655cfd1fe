#include "mimofbl/cli/run.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "mimofbl/bounds.hpp"
#include "mimofbl/cli/figures.hpp"
#include "mimofbl/cli/plot.hpp"
#include "mimofbl/compare.hpp"
#include "mimofbl/ergodic.hpp"
#include "mimofbl/version.hpp"

namespace mimofbl::cli {
namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

const char* command_name(Command c) {
  switch (c) {
    case Command::Bounds: return "bounds";
    case Command::Ergodic: return "ergodic";
    case Command::Compare: return "compare";
    case Command::Exchange: return "exchange";
    case Command::WishartCheck: return "wishart-check";
    case Command::Figure: return "figure";
  }
  return "?";
}

const char* scheme_name(Scheme s) { return s == Scheme::ST ? "st" : "td"; }

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::vector<Scheme> selected_schemes(SchemeSelection sel) {
  switch (sel) {
    case SchemeSelection::St: return {Scheme::ST};
    case SchemeSelection::Td: return {Scheme::TD};
    case SchemeSelection::Both: return {Scheme::ST, Scheme::TD};
  }
  return {};
}

// Every input that shapes the numbers lands in the preamble. The worker
// count deliberately does not: outputs are worker-count independent, and
// recording it would break byte-identity across reruns with more cores.
void echo_spec(CsvTable& t, const RunSpec& spec) {
  t.add_meta("version", std::string(kVersion));
  t.add_meta("command", std::string(command_name(spec.command)));
  t.add_meta("tx", static_cast<long long>(spec.tx));
  t.add_meta("rx", static_cast<long long>(spec.rx));
  t.add_meta("snr_db", spec.snr_db);
  t.add_meta("snr_linear", spec.snr_linear());
  t.add_meta("blocklength", static_cast<long long>(spec.blocklength));
  t.add_meta("epsilon", spec.epsilon);
  t.add_meta("per_link_rate", spec.per_link_rate);
  t.add_meta("sweep", spec.sweep.active() ? spec.sweep.to_text() : "none");
  t.add_meta("trials", static_cast<long long>(spec.trials));
  t.add_meta("seed", spec.seed);
  t.add_meta("workers", "any (outputs are worker-count independent)");
  t.add_meta("delta", spec.delta);
  t.add_meta("kappa_policy", spec.kappa_policy_text);
  t.add_meta("scheme", spec.scheme == SchemeSelection::St   ? "st"
                       : spec.scheme == SchemeSelection::Td ? "td"
                                                            : "both");
  t.add_meta("rate_normalization",
             spec.rate_norm == RateNormalization::Capacity ? "capacity" : "none");
  t.add_meta("report",
             spec.report == ErgodicReportKind::Rate ? "rate" : "moments");
  t.add_meta("solve_for", spec.solve_for);
  t.add_meta("out", basename_of(spec.out_path));
}

std::string fd(double v) { return format_double(v); }
std::string fi(long long v) { return format_int(v); }

RunResult run_bounds(const RunSpec& spec) {
  RunResult res;
  echo_spec(res.table, spec);
  if (spec.sweep.active() && spec.sweep.variable != "n") {
    throw std::invalid_argument("bounds: only blocklength sweeps (var 'n')");
  }
  const SystemConfig cfg = spec.system();
  RngState rng(spec.seed, 0);
  const ChannelRealization ch = sample_channel(cfg, rng);
  {
    std::string eigs;
    for (std::size_t i = 0; i < ch.eigenvalues.size(); ++i) {
      if (i) eigs += ";";
      eigs += fd(ch.eigenvalues[i]);
    }
    res.table.add_meta("eigenvalues", eigs);
  }

  const std::vector<int> n_list = spec.sweep.active()
                                      ? sweep_integer_values(spec.sweep)
                                      : std::vector<int>{spec.blocklength};
  const std::vector<Scheme> schemes = selected_schemes(spec.scheme);
  const bool normalize = spec.rate_norm == RateNormalization::Capacity;
  const std::string unit = normalize ? "(C=1)" : "(bits/use)";
  res.table.header = {"n(uses)",
                      "scheme",
                      "capacity(bits/use)",
                      "normal_approx" + unit,
                      "achievability_asymptotic" + unit,
                      "converse_finite" + unit,
                      "converse_feasible(0/1)",
                      "achievability_finite" + unit,
                      "achievability_feasible(0/1)",
                      "berry_esseen_ratio",
                      "dominance_ratio"};

  std::vector<SchemeStats> stats;
  stats.reserve(schemes.size());
  for (Scheme s : schemes) stats.push_back(scheme_stats(ch, cfg, s));

  const int total = static_cast<int>(schemes.size() * n_list.size());
  std::vector<std::vector<std::string>> rows(total);
  std::atomic<int> conv_ok{0}, ach_ok{0};
  parallel_run(total, spec.workers, [&](int idx) {
    const int si = idx / static_cast<int>(n_list.size());
    const int ni = idx % static_cast<int>(n_list.size());
    const SchemeStats& st = stats[si];
    const OperatingPoint op(n_list[ni], spec.epsilon);
    const RatePoint na = normal_approx_rate(st, op);
    const RatePoint asym = achievability_asymptotic(st, op);
    const RatePoint conv = converse_finite(st, op, spec.delta);
    const RatePoint ach = achievability_finite(st, op, spec.kappa());
    const ValidityDiagnostics diag = na_validity(st, op);
    if (conv.feasible) ++conv_ok;
    if (ach.feasible) ++ach_ok;
    const double scale =
        normalize && st.capacity > 0.0 ? 1.0 / st.capacity : 1.0;
    rows[idx] = {fi(op.blocklength),
                 scheme_name(st.scheme),
                 fd(st.capacity),
                 fd(na.rate * scale),
                 fd(asym.rate * scale),
                 fd(conv.rate * scale),
                 fi(conv.feasible ? 1 : 0),
                 fd(ach.rate * scale),
                 fi(ach.feasible ? 1 : 0),
                 fd(diag.berry_esseen_ratio),
                 fd(diag.dominance_ratio)};
  });
  res.table.rows = std::move(rows);
  res.summary.push_back("bounds: " + fi(total) + " points, converse feasible at " +
                        fi(conv_ok.load()) + ", finite achievability feasible at " +
                        fi(ach_ok.load()));
  if (conv_ok.load() + ach_ok.load() == 0) {
    res.exit_code = 2;
    res.diagnostic =
        "every finite bound on this sweep is infeasible: the Berry-Esseen "
        "term dominates epsilon at these blocklengths";
  }
  return res;
}

RunResult run_ergodic(const RunSpec& spec) {
  RunResult res;
  echo_spec(res.table, spec);
  const ParallelFor pf = make_parallel_for(spec.workers);
  const EigenEnsemble ens =
      sample_eigen_ensemble(spec.tx, spec.rx, spec.trials, spec.seed, pf);
  const int m = std::min(spec.tx, spec.rx);

  if (spec.report == ErgodicReportKind::Moments) {
    if (spec.sweep.active() && spec.sweep.variable != "snr-db") {
      throw std::invalid_argument(
          "ergodic moments: only SNR sweeps (var 'snr-db')");
    }
    const std::vector<double> snrs_db = spec.sweep.active()
                                            ? sweep_values(spec.sweep)
                                            : std::vector<double>{spec.snr_db};
    res.table.header = {"tx",
                        "rx",
                        "m",
                        "snr_db(dB)",
                        "trials",
                        "e_capacity(bits/use)",
                        "e_capacity_se(bits/use)",
                        "e_dispersion_st(bits2/use)",
                        "e_dispersion_st_se(bits2/use)",
                        "var_dispersion_st(bits4)",
                        "var_dispersion_st_se(bits4)",
                        "e_dispersion_td(bits2/use)",
                        "e_dispersion_td_se(bits2/use)",
                        "e_sqrt_dispersion_td(bits/use)",
                        "e_sqrt_dispersion_td_se(bits/use)",
                        "e_sqrt_dispersion_td_taylor(bits/use)",
                        "e_sqrt_dispersion_td_taylor_se(bits/use)",
                        "hs_capacity(bits/use)",
                        "hs_dispersion_st(bits2/use)",
                        "hs_sqrt_dispersion_td(bits/use)"};
    std::vector<std::vector<std::string>> rows(snrs_db.size());
    parallel_run(static_cast<int>(snrs_db.size()), spec.workers, [&](int i) {
      const double db = snrs_db[i];
      const ErgodicReport r =
          report_from_ensemble(ens, std::pow(10.0, db / 10.0));
      rows[i] = {fi(spec.tx),
                 fi(spec.rx),
                 fi(m),
                 fd(db),
                 fi(spec.trials),
                 fd(r.e_capacity.mean),
                 fd(r.e_capacity.std_error),
                 fd(r.e_dispersion_st.mean),
                 fd(r.e_dispersion_st.std_error),
                 fd(r.var_dispersion_st.mean),
                 fd(r.var_dispersion_st.std_error),
                 fd(r.e_dispersion_td.mean),
                 fd(r.e_dispersion_td.std_error),
                 fd(r.e_sqrt_dispersion_td.mean),
                 fd(r.e_sqrt_dispersion_td.std_error),
                 fd(r.e_sqrt_dispersion_td_taylor.mean),
                 fd(r.e_sqrt_dispersion_td_taylor.std_error),
                 fd(r.high_snr_capacity),
                 fd(r.high_snr_dispersion_st),
                 fd(r.high_snr_sqrt_dispersion_td)};
    });
    res.table.rows = std::move(rows);
    res.summary.push_back("ergodic moments: " + fi(res.table.rows.size()) +
                          " rows over " + fi(spec.trials) + " trials");
    return res;
  }

  // Rate report: hs closed forms and the ensemble average of the
  // per-realization normal-approximation rate, total and per link.
  if (spec.sweep.active() && spec.sweep.variable != "n" &&
      spec.sweep.variable != "snr-db") {
    throw std::invalid_argument("ergodic rate: sweep var must be 'n' or 'snr-db'");
  }
  struct Point {
    int n;
    double snr_db;
  };
  std::vector<Point> points;
  if (spec.sweep.active() && spec.sweep.variable == "n") {
    for (int n : sweep_integer_values(spec.sweep))
      points.push_back({n, spec.snr_db});
  } else if (spec.sweep.active()) {
    for (double db : sweep_values(spec.sweep))
      points.push_back({spec.blocklength, db});
  } else {
    points.push_back({spec.blocklength, spec.snr_db});
  }
  res.table.header = {"n(uses)",
                      "snr_db(dB)",
                      "m",
                      "trials",
                      "shannon_per_link(bits/use)",
                      "rate_st_hs(bits/use)",
                      "rate_td_hs(bits/use)",
                      "rate_st_mc(bits/use)",
                      "rate_st_mc_se(bits/use)",
                      "rate_td_mc(bits/use)",
                      "rate_td_mc_se(bits/use)",
                      "rate_st_hs_per_link(bits/use)",
                      "rate_td_hs_per_link(bits/use)",
                      "rate_st_mc_per_link(bits/use)",
                      "rate_td_mc_per_link(bits/use)"};
  std::vector<std::vector<std::string>> rows(points.size());
  parallel_run(static_cast<int>(points.size()), spec.workers, [&](int i) {
    const Point& p = points[i];
    const double snr = std::pow(10.0, p.snr_db / 10.0);
    const SystemConfig cfg(spec.tx, spec.rx, snr);
    const OperatingPoint op(p.n, spec.epsilon);
    const double st_hs = max_achievable_rate_high_snr(cfg, op, Scheme::ST);
    const double td_hs = max_achievable_rate_high_snr(cfg, op, Scheme::TD);
    const McEstimate st_mc = rate_from_ensemble(ens, snr, op, Scheme::ST);
    const McEstimate td_mc = rate_from_ensemble(ens, snr, op, Scheme::TD);
    rows[i] = {fi(p.n),
               fd(p.snr_db),
               fi(m),
               fi(spec.trials),
               fd(std::log2(1.0 + snr)),
               fd(st_hs),
               fd(td_hs),
               fd(st_mc.mean),
               fd(st_mc.std_error),
               fd(td_mc.mean),
               fd(td_mc.std_error),
               fd(st_hs / m),
               fd(td_hs / m),
               fd(st_mc.mean / m),
               fd(td_mc.mean / m)};
  });
  res.table.rows = std::move(rows);
  res.summary.push_back("ergodic rate: " + fi(res.table.rows.size()) +
                        " rows over " + fi(spec.trials) + " trials");
  return res;
}

RunResult run_compare(const RunSpec& spec) {
  RunResult res;
  echo_spec(res.table, spec);
  if (spec.sweep.active() && spec.sweep.variable != "n") {
    throw std::invalid_argument("compare: only blocklength sweeps (var 'n')");
  }
  const SystemConfig cfg = spec.system();
  const std::vector<int> n_list = spec.sweep.active()
                                      ? sweep_integer_values(spec.sweep)
                                      : std::vector<int>{spec.blocklength};
  res.table.header = {"n(uses)",     "m",
                      "delta(bits/use)", "eps_st(prob)",
                      "eps_td(prob)",    "ln_eps_st(nats)",
                      "ln_eps_td(nats)"};
  std::vector<std::vector<std::string>> rows(n_list.size());
  parallel_run(static_cast<int>(n_list.size()), spec.workers, [&](int i) {
    const ComparisonPoint p =
        comparison_point(cfg, n_list[i], spec.per_link_rate);
    rows[i] = {fi(p.blocklength),
               fi(cfg.dof()),
               fd(p.delta),
               fd(p.eps_st),
               fd(p.eps_td),
               fd(error_probability_ln(cfg, p.blocklength, spec.per_link_rate,
                                       Scheme::ST)),
               fd(error_probability_ln(cfg, p.blocklength, spec.per_link_rate,
                                       Scheme::TD))};
  });
  res.table.rows = std::move(rows);
  res.summary.push_back("compare: " + fi(res.table.rows.size()) + " rows");
  return res;
}

RunResult run_exchange(const RunSpec& spec) {
  RunResult res;
  echo_spec(res.table, spec);
  const SystemConfig cfg = spec.system();
  const bool for_n = spec.solve_for == "n";
  const int fixed = for_n ? cfg.dof() : spec.blocklength;
  res.table.header = {"solve_for",        "fixed_value",
                      "solution",         "achieved_eps(prob)",
                      "target_eps(prob)", "delta(bits/use)"};
  ExchangeSolution sol;
  try {
    sol = solve_exchange(cfg, spec.per_link_rate, spec.epsilon,
                         for_n ? ExchangeSolution::Variable::N
                               : ExchangeSolution::Variable::M,
                         fixed);
  } catch (const std::domain_error& e) {
    res.exit_code = 2;
    res.diagnostic = std::string("exchange unsatisfiable: ") + e.what();
    return res;
  }
  const double delta = std::log2(1.0 + cfg.snr) - spec.per_link_rate;
  res.table.rows.push_back({spec.solve_for, fi(fixed), fi(sol.value),
                            fd(sol.achieved_eps), fd(spec.epsilon), fd(delta)});
  res.summary.push_back("exchange: minimal " + spec.solve_for + " = " +
                        fi(sol.value) + " at achieved eps " +
                        fd(sol.achieved_eps));
  return res;
}

RunResult run_wishart(const RunSpec& spec) {
  RunResult res;
  echo_spec(res.table, spec);
  res.table.header = {"tx",          "rx",      "gap",   "divergent(0/1)",
                      "closed_form", "mc_mean", "mc_se", "trials"};
  const std::optional<double> closed =
      wishart_inverse_trace(spec.tx, spec.rx);
  const int gap = std::abs(spec.tx - spec.rx);
  if (!closed.has_value()) {
    res.table.rows.push_back({fi(spec.tx), fi(spec.rx), fi(gap), "1", "nan",
                              "nan", "nan", fi(spec.trials)});
    res.summary.push_back(
        "wishart-check: |L-N| <= 1, closed form divergent; MC not attempted");
    return res;
  }
  const McEstimate mc = wishart_inverse_trace_mc(
      spec.tx, spec.rx, spec.trials, spec.seed, make_parallel_for(spec.workers));
  res.table.rows.push_back({fi(spec.tx), fi(spec.rx), fi(gap), "0",
                            fd(*closed), fd(mc.mean), fd(mc.std_error),
                            fi(spec.trials)});
  res.summary.push_back("wishart-check: closed form " + fd(*closed) +
                        ", mc " + fd(mc.mean) + " +- " + fd(mc.std_error));
  return res;
}

RunResult run_figure(const RunSpec& spec) {
  RunResult res;
  const FigurePreset* preset = find_figure_preset(spec.figure_id);
  if (preset == nullptr) {
    res.exit_code = 2;
    res.diagnostic = "unknown figure id '" + spec.figure_id + "'";
    return res;
  }
  res.table.add_meta("version", std::string(kVersion));
  res.table.add_meta("command", "figure");
  res.table.add_meta("figure_id", preset->id);
  res.table.add_meta("seed", spec.seed);
  res.table.add_meta("workers", "any (outputs are worker-count independent)");
  res.table.add_meta("out", basename_of(spec.out_path));

  for (std::size_t r = 0; r < preset->runs.size(); ++r) {
    const FigureSeriesSpec& series = preset->runs[r];
    const std::uint64_t sub_seed = mix64(spec.seed + kSeedStride * (r + 1));
    std::vector<std::string> tokens = series.args;
    tokens.push_back("--label");
    tokens.push_back(series.label);
    tokens.push_back("--workers");
    tokens.push_back(std::to_string(spec.workers));
    if (!series.args.empty() && series.args.front() != "compare") {
      tokens.push_back("--seed");
      tokens.push_back(std::to_string(sub_seed));
    }
    RunSpec sub = parse_tokens(tokens);
    RunResult sub_res = run(sub);
    if (sub_res.exit_code > res.exit_code) {
      res.exit_code = sub_res.exit_code;
      res.diagnostic = sub_res.diagnostic;
    }
    if (res.table.header.empty()) {
      res.table.header.push_back("series");
      res.table.header.insert(res.table.header.end(),
                              sub_res.table.header.begin(),
                              sub_res.table.header.end());
    } else if (res.table.header.size() != sub_res.table.header.size() + 1) {
      throw std::logic_error("figure preset mixes incompatible run tables");
    }
    for (auto& row : sub_res.table.rows) {
      std::vector<std::string> full;
      full.reserve(row.size() + 1);
      full.push_back(series.label);
      for (auto& cell : row) full.push_back(std::move(cell));
      res.table.rows.push_back(std::move(full));
    }
    std::string args_text;
    for (const auto& tok : series.args) {
      if (!args_text.empty()) args_text += " ";
      args_text += tok;
    }
    const std::string key = "series." + std::to_string(r);
    res.table.add_meta(key + ".label", series.label);
    res.table.add_meta(key + ".args", args_text);
    if (!series.args.empty() && series.args.front() != "compare") {
      res.table.add_meta(key + ".seed", sub_seed);
    }
  }
  res.plot_script = emit_plot_script(res.table, preset->id);
  res.summary.push_back("figure " + preset->id + ": " +
                        fi(preset->runs.size()) + " series, " +
                        fi(res.table.rows.size()) + " rows");
  return res;
}

}  // namespace

void parallel_run(int count, int workers, const std::function<void(int)>& body) {
  if (count <= 0) return;
  if (workers <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  const int thread_count = std::min(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (int w = 0; w < thread_count; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(count);  // stop handing out work
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

ParallelFor make_parallel_for(int workers) {
  return [workers](int count, const std::function<void(int)>& body) {
    parallel_run(count, workers, body);
  };
}

RunResult run(const RunSpec& spec) {
  switch (spec.command) {
    case Command::Bounds: return run_bounds(spec);
    case Command::Ergodic: return run_ergodic(spec);
    case Command::Compare: return run_compare(spec);
    case Command::Exchange: return run_exchange(spec);
    case Command::WishartCheck: return run_wishart(spec);
    case Command::Figure: return run_figure(spec);
  }
  throw std::logic_error("run: unhandled command");
}

int run_main(int argc, char** argv) {
  RunSpec spec;
  CLI::App app{"Finite-blocklength analysis of MIMO coding schemes"};
  attach_cli(app, spec);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  RunResult res;
  try {
    res = run(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = res.table.to_text();
  if (spec.out_path.empty()) {
    std::cout << text;
    for (const auto& line : res.summary) std::cerr << line << "\n";
  } else {
    std::ofstream file(spec.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open output path " << spec.out_path << "\n";
      return 3;
    }
    file << text;
    file.close();
    if (!file) {
      std::cerr << "error: write failed for " << spec.out_path << "\n";
      return 3;
    }
    for (const auto& line : res.summary) std::cout << line << "\n";
    std::cout << "wrote " << res.table.rows.size() << " rows to "
              << spec.out_path << "\n";
    if (!res.plot_script.empty()) {
      std::string gp_path = spec.out_path;
      const std::string suffix = ".csv";
      if (gp_path.size() > suffix.size() &&
          gp_path.compare(gp_path.size() - suffix.size(), suffix.size(),
                          suffix) == 0) {
        gp_path.resize(gp_path.size() - suffix.size());
      }
      gp_path += ".gp";
      std::ofstream gp(gp_path, std::ios::binary);
      if (!gp) {
        std::cerr << "error: cannot open plot script path " << gp_path << "\n";
        return 3;
      }
      gp << res.plot_script;
      gp.close();
      std::cout << "wrote plot script " << gp_path << "\n";
    }
  }
  if (!res.diagnostic.empty()) {
    std::cerr << "diagnostic: " << res.diagnostic << "\n";
  }
  return res.exit_code;
}

}  // namespace mimofbl::cli
