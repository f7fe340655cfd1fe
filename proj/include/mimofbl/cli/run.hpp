#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mimofbl/cli/csv.hpp"
#include "mimofbl/cli/runspec.hpp"
#include "mimofbl/exec.hpp"

namespace mimofbl::cli {

struct RunResult {
  CsvTable table;
  std::string plot_script;  // nonempty only for figure runs
  std::vector<std::string> summary;
  std::string diagnostic;  // nonempty iff exit_code != 0
  int exit_code = 0;
};

// Executes a RunSpec and assembles the CSV. Pure with respect to the
// filesystem; writing files and printing is run_main's job.
RunResult run(const RunSpec& spec);

// Dynamic scheduling over [0, count); callees write by index, so the
// schedule changes nothing observable. The first exception thrown by a
// body is rethrown after all workers stop.
void parallel_run(int count, int workers, const std::function<void(int)>& body);
ParallelFor make_parallel_for(int workers);

// Full CLI entry point: parse argv, run, write outputs, print summary.
int run_main(int argc, char** argv);

}  // namespace mimofbl::cli
