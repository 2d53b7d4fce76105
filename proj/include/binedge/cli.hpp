#ifndef BINEDGE_CLI_HPP
#define BINEDGE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "binedge/graph.hpp"

namespace binedge {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,        ///< verification failed or decomposition mismatch
  kExitInvalid = 2,       ///< bad arguments, invalid or disconnected graph
  kExitParse = 3,         ///< malformed graph, polynomial or certificate text
  kExitNotAttempted = 4,  ///< Groebner budget exhausted
  kExitInternal = 5,
};

/// Runs the command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

const std::vector<std::string>& sweep_families();
/// Member `parameter` of a sweep family (see the README for the parameter of
/// each family).
SimpleGraph sweep_graph(const std::string& family, int parameter);

}  // namespace binedge

#endif  // BINEDGE_CLI_HPP
