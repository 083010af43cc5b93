#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genus_forge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitInternal = 3;

/// Runs the genus-forge command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genus_forge
