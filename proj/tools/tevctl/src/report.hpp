#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tevelev/crosscheck.hpp"

namespace tevctl {

using Json = nlohmann::ordered_json;

enum class Kind { Tev, Vtev, Both };
enum class EngineChoice { Auto, Grr, Closed, Residue, Qh };
enum class Format { Json, Csv, Plain };

std::optional<Kind> kind_from_name(const std::string& s);
std::optional<EngineChoice> engine_choice_from_name(const std::string& s);
std::optional<Format> format_from_name(const std::string& s);
std::string kind_name(Kind k);

struct ComputeRequest {
  int r = 0;
  int g = 0;
  std::int64_t d = 0;
  std::vector<std::int64_t> k;
  std::optional<std::int64_t> n;
  Kind kind = Kind::Both;
  EngineChoice engine = EngineChoice::Auto;
};

/// Exit statuses shared by every command.
enum Exit : int { kOk = 0, kInconsistent = 1, kUsage = 2, kIo = 3 };

struct ComputeOutcome {
  int exit_code = kOk;
  Json record;                       // always a well-formed record
  std::string diagnostic;            // for standard error; empty on success
  std::optional<tev::CheckResult> result;
};

/// Engines of the requested family that the engine choice selects.
std::set<tev::Engine> select_engines(Kind kind, EngineChoice choice);

ComputeOutcome run_compute(const ComputeRequest& req, tev::EngineContext* context = nullptr);

/// Reads r, g, d, k, n, kind, engine from a record; integers may be JSON
/// numbers or decimal strings. Unknown keys are ignored. Throws
/// std::invalid_argument on a missing or malformed field.
ComputeRequest request_from_json(const Json& j);

/// Parses "1,2,3" (or the empty string) into a k-vector.
std::vector<std::int64_t> parse_k_list(const std::string& s);

std::string csv_header();
std::string csv_escape(const std::string& field);

std::string render(const ComputeOutcome& outcome, Format format);

}  // namespace tevctl
