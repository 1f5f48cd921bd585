#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lts::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lts::cli
