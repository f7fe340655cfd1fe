#include "mimofbl/cli/plot.hpp"

#include <stdexcept>

#include "mimofbl/cli/figures.hpp"

namespace mimofbl::cli {
namespace {

int column_index(const CsvTable& table, const std::string& name) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (table.header[i] == name) return static_cast<int>(i) + 1;  // gnuplot is 1-based
  }
  throw std::invalid_argument("plot: column '" + name + "' not in CSV header");
}

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

}  // namespace

std::string emit_plot_script(const CsvTable& table,
                             const std::string& figure_id) {
  const FigurePreset* preset = find_figure_preset(figure_id);
  if (preset == nullptr) {
    throw std::invalid_argument("plot: unknown figure id '" + figure_id + "'");
  }
  std::string datafile = "figure.csv";
  for (const auto& [key, value] : table.metadata) {
    if (key == "out" && !value.empty()) datafile = basename_of(value);
  }

  std::string s;
  s += "# gnuplot script, renders " + datafile + "\n";
  s += "set datafile separator \",\"\n";
  s += "set datafile missing \"nan\"\n";
  s += "set datafile commentschars \"#\"\n";
  s += "set key outside right\n";
  s += "set grid\n";
  s += "set title \"" + preset->title + "\"\n";
  s += "set xlabel \"" + preset->xlabel + "\"\n";
  s += "set ylabel \"" + preset->ylabel + "\"\n";
  if (preset->logx) s += "set logscale x\n";
  if (preset->logy) s += "set logscale y\n";

  if (table.rows.empty()) {
    // Bare axes: a constant outside a pinned range draws nothing.
    s += "plot [0:1] [0:1] -1 notitle\n";
    return s;
  }

  const int xcol = column_index(table, preset->xcol);
  const int lcol = column_index(table, "series");
  s += "plot \\\n";
  for (std::size_t i = 0; i < preset->plot.size(); ++i) {
    const auto& series = preset->plot[i];
    const int ycol = column_index(table, series.ycol);
    s += "  '" + datafile + "' using " + std::to_string(xcol) + ":(strcol(" +
         std::to_string(lcol) + ") eq \"" + series.label + "\" ? column(" +
         std::to_string(ycol) + ") : NaN) with linespoints title \"" +
         series.title + "\"";
    s += (i + 1 < preset->plot.size()) ? ", \\\n" : "\n";
  }
  return s;
}

}  // namespace mimofbl::cli
