#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qcum/core.hpp"

namespace qcum::cli {

enum ExitCode : int {
    kSuccess = 0,      // true / found / no mismatch
    kNegative = 1,     // false / none
    kUsageError = 2,
    kSelfCheckFailed = 3,
};

/// Parses "3,1,1". Parts must be positive integers; unless `sort` is set they
/// must already be weakly decreasing. An empty string is the empty partition.
Partition parse_partition(std::string_view text, bool sort);

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcum::cli
