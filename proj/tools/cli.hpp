#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seifert5::cli {

// Exit codes
constexpr int kOk = 0;
constexpr int kConsistency = 1;
constexpr int kInvalid = 2;

/// Runs one command line (args exclude the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seifert5::cli
