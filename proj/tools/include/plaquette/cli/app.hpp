#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plaquette::cli {

/// Runs plaquette-qgauge with args (program name excluded). CSV and reports go
/// to out unless an output path is configured; diagnostics go to err.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace plaquette::cli
