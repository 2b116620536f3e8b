#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tiltkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Results and error
/// objects go to out as a single line of JSON; help text also goes to out.
int dispatch(const std::vector<std::string>& args, std::ostream& out);

}  // namespace tiltkit::cli
