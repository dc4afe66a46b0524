#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "penrose/exact.hpp"

namespace penrose::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsageError = 2 };

/// Runs one command; args excludes the program name. Output files named by
/// --out are written directly, everything else goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "-1/5", "0.25", "-.5" as an exact rational. Throws InvalidArgument.
Rational parse_rational(const std::string& text);

}  // namespace penrose::cli
