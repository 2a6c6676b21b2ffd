#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace upse::cli {

// Exit status contract of the upse tool.
inline constexpr int kOk = 0;        // success, embeddable, valid
inline constexpr int kNegative = 1;  // not embeddable, invalid mapping
inline constexpr int kInputError = 2;
inline constexpr int kBudget = 3;

/// Runs `upse <args...>` (args excludes the program name). Results go to
/// out; failures go to err as {"error": kind, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upse::cli
