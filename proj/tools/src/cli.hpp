// Copyright 2026 The ghzsim Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ghzsim::cli {

inline constexpr int kManifestVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags or a manifest that does not parse; exits with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::optional<int> threads;                      ///< overrides the manifest
  std::optional<std::filesystem::path> output_dir;  ///< re-roots output paths
};

/// Executes a run manifest; prints progress to `out` and returns an exit
/// status. Writes the resolved manifest beside the primary output.
int run_manifest(nlohmann::json manifest, const RunOptions& options, std::ostream& out,
                 std::ostream& err);

/// Reads a manifest file; UsageError when it is not a JSON object.
nlohmann::json load_manifest(const std::filesystem::path& path);

/// The optimizer showcase: n=3, N=5, R=3, f_in=0.9, p=eta=0.01 with the
/// success floor of four pumping rounds.
nlohmann::json showcase_manifest(std::uint64_t seed);

/// Full command line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ghzsim::cli
