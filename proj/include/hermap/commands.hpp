// Copyright 2026 The hermap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command dispatch behind the hermap executable. Each command turns a map
// document into one JSON report.

#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermap/extend.hpp"
#include "hermap/io.hpp"

namespace hermap {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitVerifyFailed = 3,
};

struct CommandOptions {
  std::optional<double> tol;  // sets all three thresholds, absolute
  std::optional<double> tol_eig;
  std::optional<double> tol_psd;
  std::optional<double> tol_recon;
  std::uint64_t seed = 0;
  int samples = 100;
  std::optional<std::string> partition;  // "m1,m2,.../n1,n2,..."
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

const std::vector<std::string>& command_names();

/// Parses "2,2/2,2" into a partition; ArgumentError on malformed text.
BlockPartition parse_partition(const std::string& text);

/// Document tolerances with command-line overrides applied on top.
ToleranceConfig effective_tolerance(const MapDocument& doc, const CommandOptions& options);

/// Never throws for library errors: they become an {"error": ...} report
/// with the matching exit code.
CommandResult run_command(const std::string& command, const MapDocument& doc, const CommandOptions& options);

}  // namespace hermap
