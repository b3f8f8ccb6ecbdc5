#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eternal::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFound = 1;  // counterexample, witness or refused game
inline constexpr int kUsage = 2;
inline constexpr int kLimit = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eternal::cli
