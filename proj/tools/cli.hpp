#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addcomb::cli {

// Exit codes of the command-line tool.
constexpr int kOk = 0;
constexpr int kContractViolation = 1;
constexpr int kUsageError = 2;

// args excludes the program name: {"weyl", "--prime", "5", ...}.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addcomb::cli
