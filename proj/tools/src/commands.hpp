#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "reescm/homology.hpp"
#include "reescm/sweep.hpp"

namespace reescm::cli {

struct CommonOptions {
  bool pretty = false;
};

// Parses "q" or "p:<prime>". Throws NotPrime / SyntaxError.
Field parse_field(const std::string& spec);

// Each command prints one report document to `out` and returns the process
// exit code: 0 pass, 1 criterion false, 2 precondition or input error.
// Library errors escape as reescm::Error; run_command below maps them.
int cmd_analyze(const std::string& path, const CommonOptions& opts, std::ostream& out);
int cmd_shelling(const std::string& path, bool nonincreasing, const CommonOptions& opts,
                 std::ostream& out);
int cmd_dimfilt(const std::string& path, const CommonOptions& opts, std::ostream& out);
int cmd_hilbert(const std::string& path, const std::optional<std::string>& sub_path,
                const CommonOptions& opts, std::ostream& out);
int cmd_homology(const std::string& path, Field field, const CommonOptions& opts,
                 std::ostream& out);
int cmd_rees_check(const std::string& path, const CommonOptions& opts, std::ostream& out);
int cmd_sweep(const SweepOptions& sweep, const CommonOptions& opts, std::ostream& out);

// Runs fn(), mapping reescm::Error to a diagnostic document and exit 2.
int run_command(const std::string& command, const CommonOptions& opts, std::ostream& out,
                const std::function<int()>& fn);

}  // namespace reescm::cli
