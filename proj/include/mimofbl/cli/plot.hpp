#pragma once

#include <string>

#include "mimofbl/cli/csv.hpp"

namespace mimofbl::cli {

// Self-contained gnuplot script rendering a figure preset's CSV. The data
// file name is taken from the table's "out" metadata entry. An empty table
// produces a script that draws bare axes. Unknown figure ids throw
// std::invalid_argument.
std::string emit_plot_script(const CsvTable& table, const std::string& figure_id);

}  // namespace mimofbl::cli
