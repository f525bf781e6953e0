#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmcells/gcm.hpp"
#include "kmcells/homotopy.hpp"
#include "kmcells/weyl.hpp"

namespace kmcells::cli {

inline constexpr const char* kToolName = "kmcells";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class Format { Table, Json, Csv };

// A diagram given either by name ("E9") or by a GCM text file, plus the
// parabolic subset J (1-based text, e.g. "1-8").
struct DiagramArg {
  std::string named;
  std::string file;
  std::string sub;
  bool has_sub = false;
};

struct CommandRequest {
  std::string command;  // growth, cosets, cells, compare, homotopy-en, tower, bott
  std::vector<DiagramArg> diagrams;
  int limit = -1;  // max-len, max-dim or max-k depending on command
  int n = -1;      // homotopy-en --n, bott --n
  int sheets = 1;
  std::string space;         // tower --space
  std::string profile_file;  // tower --profile-file
  Format format = Format::Table;
  EnumerationLimits limits;
  std::vector<std::string> args;  // echoed into the report
};

struct Report {
  nlohmann::ordered_json json;  // schema, command, input, payload | error, trace
  int exit_status = 0;
  double wall_ms = 0.0;
};

// Executes a parsed request. Domain errors become a structured error report
// with exit status 1; never throws for domain errors.
Report run(const CommandRequest& request);

// Text projections of the JSON report.
std::string render(const Report& report, Format format);

nlohmann::ordered_json profile_to_json(const HomotopyProfile& p);
HomotopyProfile profile_from_json(const nlohmann::json& j);

// Full command line handling: parses `args` (without the program name),
// writes the rendered report to `out` and diagnostics to `err`, and returns
// the process exit status (0 ok, 1 domain error, 2 usage error).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmcells::cli
