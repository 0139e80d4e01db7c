#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qosc::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qosc::cli
