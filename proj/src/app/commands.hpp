#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "app/config.hpp"

namespace probjam::app {

/// The requested design does not exist. Maps to exit code 4.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kCsv, kJson };

using Cell = std::variant<double, std::string>;

/// One command's output: resolved config, free-form notes, and a fixed-column table.
struct Table {
  std::string command;                        // e.g. "optimize view=jammer"
  std::map<std::string, std::string> config;  // resolved, linear units
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render(const Table& table, OutputFormat format);

enum class View { kJammer, kAlice, kGlobal };
enum class SweepAxis { kEpsilon, kPmOverSigma };

Table cmd_detect(const Config& cfg);
Table cmd_optimize(const Config& cfg, View view, bool verify);
Table cmd_sweep(const Config& cfg, SweepAxis axis);
Table cmd_simulate(const Config& cfg);

/// Whole command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace probjam::app
