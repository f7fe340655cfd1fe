#pragma once

#include <string>
#include <vector>

namespace mimofbl::cli {

// One sub-run of a figure preset: a subcommand token list exactly as it
// could have been typed, minus --seed/--workers/--out, which the figure
// runner injects. label becomes the leading "series" CSV column.
struct FigureSeriesSpec {
  std::string label;
  std::vector<std::string> args;
};

// One plotted curve: rows matching `label`, y from column `ycol`.
struct FigurePlotSeries {
  std::string label;
  std::string ycol;
  std::string title;
};

struct FigurePreset {
  std::string id;
  std::string title;
  std::string xcol;  // CSV column holding x
  std::string xlabel;
  std::string ylabel;
  bool logx = false;
  bool logy = false;
  std::vector<FigureSeriesSpec> runs;
  std::vector<FigurePlotSeries> plot;
};

// Presets are data tables; adding one never touches computation code.
const std::vector<FigurePreset>& figure_presets();
const FigurePreset* find_figure_preset(const std::string& id);

}  // namespace mimofbl::cli
