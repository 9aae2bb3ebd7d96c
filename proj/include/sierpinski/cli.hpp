// cli.hpp
// The cpsm command line. Exit codes: 0 success, 1 failed verification,
// 2 usage error, 3 capacity or budget exhausted.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sierpinski/oracle.hpp"

namespace sierpinski::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kCapacity = 3 };

enum class Format { Json, Jsonl, Csv, Text };

// Environment variable consulted when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "CPSM_CACHE_DIR";

struct RunConfig {
    std::optional<std::filesystem::path> cache_dir;
    std::size_t prime_hard_limit = kDefaultPrimeHardLimit;
    std::size_t exact_cap = kDefaultExactCap;
    std::size_t truncation_start = kDefaultTruncationStart;
    bool exact_fallback = true;  // settle uncertifiable s with the full V_s
    OracleBudget budget;
    std::optional<Format> format;  // subcommands pick their own default
    std::size_t jobs = 1;

    // Throws PreconditionError when a limit is zero or the exact cap is above 200.
    void validate() const;
};

std::optional<Format> parse_format(const std::string& name);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// Path of the bundled Appendix listing of U.
std::filesystem::path default_fixture_path();

}  // namespace sierpinski::cli
