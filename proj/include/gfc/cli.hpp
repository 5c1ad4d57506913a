// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gfc::cli {

/// Exit codes of the batch frontend.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kIoError = 2,
  kNumericError = 3,
};

/// Runs one subcommand. `args` excludes the program name. Returns an
/// ExitCode; failures print a one-line diagnostic to stderr.
int run(std::vector<std::string> args);

/// Builds the analytic disk demo: the filled disk, its forward-difference
/// gradient as the edge field, the integrated map, and a metrics CSV
/// evaluated against the disk. Artifacts: ground_truth.pgm, edge.pgm,
/// integrated.pgm, metrics.csv under out_dir.
void demo_disk(int size, int radius, const std::filesystem::path& out_dir);

}  // namespace gfc::cli
