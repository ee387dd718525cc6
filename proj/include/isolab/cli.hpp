#pragma once

#include "isolab/graph.hpp"
#include "isolab/graph_io.hpp"
#include "isolab/verification.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace isolab::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_resource = 3,
    exit_io = 4,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() is the help text.
struct HelpRequested : UsageError {
    using UsageError::UsageError;
};

/// A validated invocation: one verb, its options keyed by long name without
/// dashes, and positional arguments.
struct Command {
    std::string verb;
    std::map<std::string, std::string> options;
    std::vector<std::string> positional;
};

/// Validates argv (without the program name). Unknown verbs, unknown
/// options, missing required options and malformed family specs throw
/// UsageError before any computation.
Command parse_args(const std::vector<std::string> & args);

Graph read_graph(const std::string & path, GraphFormat format = GraphFormat::Auto);

/// Graph expression for `construct`: attach(G, F@root), cart(G, F),
/// subdiv(G, h), extremalG(k, q, t), extremalH(k, q, t). Operands are nested
/// expressions, generator names (K3, P4, C5, S3), "petersen", or edge-list
/// file paths.
Graph evaluate_construction(const std::string & expression);

/// Deterministic JSON: an array of {check_id, computed, detail, instance,
/// verdict}, keys sorted.
std::string report_json(const std::vector<CheckReport> & reports);

/// Writes report_json to `path` ("-" for `out`) and returns exit_ok, or
/// exit_check_failed when some report failed. Throws IoError.
int emit_report(const std::vector<CheckReport> & reports, const std::string & path, std::ostream & out);

/// Executes a parsed command and returns the exit code.
int run_command(const Command & command, std::ostream & out, std::ostream & err);

/// parse_args + run_command, mapping exceptions to exit codes.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace isolab::cli
