// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "gfc/field.hpp"

namespace gfc {

/// Binary tensor interchange format:
///
///   bytes 0..7   magic "GFCTNSR1"
///   bytes 8..15  rank, little-endian uint64
///   next rank*8  dims, little-endian uint64 each
///   payload      prod(dims) IEEE-754 binary64 values, little-endian,
///                row-major (last dimension fastest)
///
/// ScalarField maps to rank 2 (H, W); FeatureBatch to rank 4 (N, C, H, W).
struct Tensor {
  std::vector<std::uint64_t> dims;
  std::vector<double> values;
};

Tensor load_tensor(const std::filesystem::path& path);
void save_tensor(const Tensor& tensor, const std::filesystem::path& path);

ScalarField load_tensor_field(const std::filesystem::path& path);
void save_tensor_field(const ScalarField& field,
                       const std::filesystem::path& path);

FeatureBatch load_tensor_batch(const std::filesystem::path& path);
void save_tensor_batch(const FeatureBatch& batch,
                       const std::filesystem::path& path);

}  // namespace gfc
