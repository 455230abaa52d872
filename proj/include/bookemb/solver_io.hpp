#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bookemb/encoder.hpp"

namespace bookemb {

// DIMACS: header `p cnf <vars> <clauses>`, one clause per line, literals
// space-separated, each line closed by `0`.  Returns the byte count.
std::size_t write_dimacs(const CnfFormula& cnf, std::ostream& out);
void write_dimacs_file(const CnfFormula& cnf, const std::string& path);
CnfFormula parse_dimacs_text(const std::string& text);
CnfFormula parse_dimacs_file(const std::string& path);

// Sidecar variable map, line oriented: `sigma <u> <v> <var>`,
// `phi <page> <u> <v> <var>`, `chi <u1> <v1> <u2> <v2> <var>`.  The parser
// rebuilds the map from the lines and cross-checks every id.
std::string write_varmap_text(const VarMap& vm);
VarMap parse_varmap_text(const std::string& text);

std::uint64_t fnv1a64(const void* data, std::size_t len);

enum class SolveStatus { Sat, Unsat, Unknown };
const char* to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<bool> model;  // 1-based, set iff Sat; verified against the formula
  std::string reason;       // set when Unknown (timeout, cancelled, ...)
  double wall_seconds = 0.0;
  std::string backend;  // concrete command line that ran
};

struct BackendConfig {
  std::string command_template;  // must contain {cnf}
  double timeout_seconds = 3600.0;
  int parallel_jobs = 1;
};

// SAT_SOLVER_CMD if set, else "<name> {cnf}" for the first of a fixed list of
// solver names found on PATH.
std::optional<std::string> discover_backend();

// Writes the formula to a temporary file and runs the backend on it.
// Timeout or nonconforming-but-harmless output yields Unknown; a backend that
// cannot start throws SpawnFailure; a claimed model that fails verification
// throws MalformedOutput.
SolveOutcome run_backend(const CnfFormula& cnf, const BackendConfig& cfg);
// Same, with the formula already on disk at cnf_path.  `cancel` (optional) is
// polled while the backend runs; setting it kills the process group.
SolveOutcome run_backend_at(const CnfFormula& cnf, const std::string& cnf_path,
                            const BackendConfig& cfg, const std::atomic<bool>* cancel = nullptr);

struct SplitJob {
  std::string name;  // file-name safe, unique
  std::vector<std::vector<std::int32_t>> extra_clauses;
};

struct SplitResult {
  SolveOutcome aggregate;  // Sat: first model found; Unsat: every job Unsat
  std::vector<std::pair<std::string, SolveOutcome>> jobs;  // input order, models dropped
  std::string summary;  // one line per job: `job <name> <status> <seconds>`
};

// Runs base + extra clauses per job with bounded parallelism.  The first Sat
// cancels the remaining jobs (best effort).  Per-job logs land in
// log_dir/<name>.log (command, formula hash, status, seconds); job CNF files
// are created on demand and removed after the run; the summary is also
// written to log_dir/summary.txt.  Per-job failures are recorded as Unknown,
// not rethrown.
SplitResult solve_split(const CnfFormula& base, const std::vector<SplitJob>& jobs,
                        const BackendConfig& cfg, const std::string& log_dir);

}  // namespace bookemb
