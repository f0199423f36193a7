#pragma once

#include "tensorforge/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorforge {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { exit_pass = 0, exit_fail = 1, exit_input_error = 2, exit_refused = 3 };

int exit_status(Verdict v);

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a report, as printed by the tool.
std::string render_report(const Report& r);
/// Machine-readable rendering with the same checks and witnesses.
std::string render_report_json(const Report& r);

}  // namespace tensorforge
