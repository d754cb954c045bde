#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace tevctl {

int cmd_compute(const ComputeRequest& req, Format format, std::ostream& out, std::ostream& err);

struct BatchOptions {
  std::string input;
  std::optional<std::string> output;  // standard output when absent
  int parallel = 1;
};

int cmd_batch(const BatchOptions& opts, std::ostream& out, std::ostream& err);

/// Batch core over in-memory lines; one JSON record per non-blank line.
std::vector<Json> run_batch_lines(const std::vector<std::string>& lines, int parallel, int* exit_code = nullptr);

struct CrosscheckOptions {
  std::optional<std::string> grid;  // preset name
  std::optional<std::string> r, g, ell, k, d;  // "lo:hi" or "v"
  std::vector<std::string> engines;
  Format format = Format::Plain;
  int parallel = 1;
};

std::vector<std::string> preset_names();
/// Grid for a preset other than qh-lemma.
std::optional<tev::GridSpec> preset_grid(const std::string& name);
tev::Range parse_range(const std::string& s);

int cmd_crosscheck(const CrosscheckOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace tevctl
