#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kvrep/intertwine.hpp"

namespace kvrep::cli {

enum ExitCode : int { ok = 0, math_failure = 1, input_error = 2 };

/// Test seams. The universal-check command evaluates through `eval`.
struct Hooks
{
  UniversalEval eval = universal_eval;
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

} // namespace kvrep::cli
