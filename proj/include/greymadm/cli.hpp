#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greymadm::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_internal_error = 2;

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`; warnings and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greymadm::cli
