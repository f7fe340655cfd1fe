#include "mimofbl/cli/figures.hpp"

namespace mimofbl::cli {
namespace {

FigurePreset bounds_panel(std::string id, std::string label, int antennas,
                          const char* snr_db) {
  FigurePreset p;
  p.id = std::move(id);
  p.title = "Rate bounds vs blocklength, L=N=" + std::to_string(antennas) +
            ", " + snr_db + " dB, eps=1e-7";
  p.xcol = "n(uses)";
  p.xlabel = "blocklength n (channel uses)";
  p.ylabel = "rate / capacity";
  const std::string a = std::to_string(antennas);
  p.runs = {{label,
             {"bounds", "--tx", a, "--rx", a, "--snr-db", snr_db, "--epsilon",
              "1e-7", "--scheme", "st", "--sweep", "n:300:1500:25", "--delta",
              "1", "--rate-normalization", "capacity"}}};
  p.plot = {
      {label, "normal_approx(C=1)", "normal approximation"},
      {label, "converse_finite(C=1)", "converse"},
      {label, "achievability_finite(C=1)", "achievability (finite)"},
  };
  return p;
}

std::vector<FigurePreset> build_presets() {
  std::vector<FigurePreset> out;

  out.push_back(bounds_panel("2a", "L4-0dB", 4, "0"));
  out.push_back(bounds_panel("2b", "L4-10dB", 4, "10"));
  out.push_back(bounds_panel("2c", "L16-10dB", 16, "10"));

  {
    FigurePreset p;
    p.id = "5";
    p.title = "Expected channel dispersion vs DoF, rho = 10 dB";
    p.xcol = "m";
    p.xlabel = "spatial DoF m = N";
    p.ylabel = "dispersion (bits^2/use)";
    for (int c : {1, 2, 4}) {
      const std::string label = "c=" + std::to_string(c);
      for (int m = 1; m <= 16; ++m) {
        p.runs.push_back({label,
                          {"ergodic", "--tx", std::to_string(c * m), "--rx",
                           std::to_string(m), "--snr-db", "10", "--trials",
                           "2000", "--report", "moments"}});
      }
      p.plot.push_back({label, "e_dispersion_st(bits2/use)", "ST sim " + label});
      p.plot.push_back({label, "e_dispersion_td(bits2/use)", "TD sim " + label});
    }
    p.plot.push_back({"c=1", "hs_dispersion_st(bits2/use)", "m log2(e)^2"});
    out.push_back(std::move(p));
  }

  {
    FigurePreset p;
    p.id = "6";
    p.title = "Per-link achievable rate vs SNR, c = L/N = 16, n = 100, eps = 1e-7";
    p.xcol = "snr_db(dB)";
    p.xlabel = "SNR (dB)";
    p.ylabel = "rate per link (bits/use)";
    for (int n_rx : {1, 2, 4}) {
      const std::string label = "N=" + std::to_string(n_rx);
      p.runs.push_back({label,
                        {"ergodic", "--tx", std::to_string(16 * n_rx), "--rx",
                         std::to_string(n_rx), "--sweep", "snr-db:0:30:16",
                         "--blocklength", "100", "--epsilon", "1e-7",
                         "--trials", "5000", "--report", "rate"}});
      p.plot.push_back({label, "rate_st_mc_per_link(bits/use)", "ST sim " + label});
      p.plot.push_back({label, "rate_st_hs_per_link(bits/use)", "ST approx " + label});
      p.plot.push_back({label, "rate_td_mc_per_link(bits/use)", "TD sim " + label});
      p.plot.push_back({label, "rate_td_hs_per_link(bits/use)", "TD approx " + label});
    }
    out.push_back(std::move(p));
  }

  {
    FigurePreset p;
    p.id = "7";
    p.title = "Per-link achievable rate vs blocklength, rho = 10 dB, eps = 1e-7";
    p.xcol = "n(uses)";
    p.xlabel = "blocklength n (channel uses)";
    p.ylabel = "rate per link (bits/use)";
    p.logx = true;
    const std::pair<int, const char*> dof_trials[] = {
        {1, "20000"}, {4, "10000"}, {16, "4000"}, {64, "400"}};
    for (const auto& [m, trials] : dof_trials) {
      const std::string label = "m=" + std::to_string(m);
      p.runs.push_back({label,
                        {"ergodic", "--tx", std::to_string(m), "--rx",
                         std::to_string(m), "--snr-db", "10", "--sweep",
                         "n:10:500:25:log", "--blocklength", "100",
                         "--epsilon", "1e-7", "--trials", trials, "--report",
                         "rate"}});
      p.plot.push_back({label, "rate_st_hs_per_link(bits/use)", "ST " + label});
      p.plot.push_back({label, "rate_td_hs_per_link(bits/use)", "TD " + label});
      p.plot.push_back({label, "rate_st_mc_per_link(bits/use)", "ST sim " + label});
      p.plot.push_back({label, "rate_td_mc_per_link(bits/use)", "TD sim " + label});
    }
    p.plot.push_back({"m=1", "shannon_per_link(bits/use)", "Shannon capacity"});
    out.push_back(std::move(p));
  }

  {
    FigurePreset p;
    p.id = "8";
    p.title = "Decoding error probability vs blocklength, per-link rate 2 bits, m = 4";
    p.xcol = "n(uses)";
    p.xlabel = "blocklength n (channel uses)";
    p.ylabel = "decoding error probability";
    p.logy = true;
    p.runs = {{"m=4",
               {"compare", "--tx", "4", "--rx", "4", "--snr-db", "10",
                "--per-link-rate", "2", "--sweep", "n:10:400:40"}}};
    p.plot = {
        {"m=4", "eps_st(prob)", "spatiotemporal"},
        {"m=4", "eps_td(prob)", "time-domain"},
    };
    out.push_back(std::move(p));
  }

  return out;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = build_presets();
  return presets;
}

const FigurePreset* find_figure_preset(const std::string& id) {
  for (const auto& p : figure_presets()) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

}  // namespace mimofbl::cli
