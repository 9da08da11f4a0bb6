// Copyright 2026 The mwmcds Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MWMCDS_TOOLS_CLI_HPP
#define MWMCDS_TOOLS_CLI_HPP

#include <iosfwd>

namespace mwmcds::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitParse = 2,
  kExitInfeasible = 3,
  kExitCap = 4,
  kExitConfig = 5,
  kExitInternal = 6,
};

/// Entry point of the `mwmcds` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mwmcds::cli

#endif  // MWMCDS_TOOLS_CLI_HPP
