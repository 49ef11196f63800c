#pragma once

// Command-line front end: verify, casimir, twist, center and export on .qh
// structure files or built-ins named builtin:NAME.

#include <ostream>
#include <string>
#include <vector>

namespace qhopf::cli {

// Exit statuses.
inline constexpr int kPass = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kInputError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhopf::cli
