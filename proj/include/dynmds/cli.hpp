#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynmds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. Exit 0 on success,
/// 1 on domain errors (error name on `err`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynmds::cli
