#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gitfan::cli {

enum ExitCode : int { ok = 0, usage = 2, validation = 3, fixture_failure = 4 };

/// Runs one command; args excludes the program name. Reports (JSON, or SVG
/// for `chambers --svg`) go to `out`, including error reports of the form
/// {"error": {"code": ..., "message": ...}}.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace gitfan::cli
