#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lefschetz/ideal.hpp"

namespace lefschetz {

/// Resolves an ideal argument: "@name" for the stored fixtures, inline
/// "n=3; x1^2, ..." text, an inline JSON object, or a path to a file holding
/// either form.  Throws std::invalid_argument on anything unreadable.
MonomialIdeal load_ideal_argument(const std::string& argument);

/// Runs the command-line tool.  args excludes the program name.  Returns the
/// process exit code: 0 pass/success, 1 checked property fails or search
/// exhausted, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz
