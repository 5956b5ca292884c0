#ifndef EXTHOM_CLI_HPP
#define EXTHOM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace exthom {

/// Runs the exthom command line on the given arguments (program name
/// excluded), writing normal output to `out` and diagnostics to `err`.
/// Exit contract: 0 = success and every checked bound/conjecture holds;
/// 1 = a violation or counterexample was found; 2 = usage, parse, or cap
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace exthom

#endif
