#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ellgal::cli {

inline constexpr const char* kFormatVersion = "1.0";
inline constexpr const char* kSeedEnvVar = "ELLGAL_SEED";

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kCapExceeded = 3 };

/// Runs one invocation. args excludes the program name. env_seed stands in
/// for the seed environment variable; --seed takes precedence over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed = std::nullopt);

}  // namespace ellgal::cli
