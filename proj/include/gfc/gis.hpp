// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gfc/field.hpp"
#include "gfc/green.hpp"

namespace gfc {

/// How the 3n input channels of the GIS layer are grouped into
/// (S, Ex, Ey) triples.
enum class ChannelLayout {
  /// Channels [0,n) are S, [n,2n) are Ex, [2n,3n) are Ey.
  kGrouped,
  /// Channels 3k, 3k+1, 3k+2 form triple k.
  kInterleaved,
};

struct GisConfig {
  ChannelLayout layout = ChannelLayout::kGrouped;
};

/// Gradient-integration-and-sum layer: for each item and each channel
/// triple, output = S + integrate_gradient((Ex, Ey)). No weights and no
/// learned parameters; output shape is (N, n, H, W) for input (N, 3n, H, W).
/// Throws ShapeError when the channel count is not divisible by 3.
FeatureBatch gis_forward(const FeatureBatch& input, const GisConfig& cfg,
                         GreenOperatorCache& cache);

/// Transpose of the linear map gis_forward: maps an upstream gradient of
/// shape (N, n, H, W) back to (N, 3n, H, W). The S slot receives the
/// upstream gradient unchanged; the (Ex, Ey) slots receive
/// integrate_gradient_adjoint of it.
FeatureBatch gis_adjoint(const FeatureBatch& upstream, const GisConfig& cfg,
                         GreenOperatorCache& cache);

/// Wall-clock statistics for gis_forward, split into the cold first call
/// (which builds the Green operator) and warmed-up repeats.
struct GisTimingReport {
  int batch = 0;
  int repeats = 0;
  double cold_call_seconds = 0.0;
  double warm_mean_seconds = 0.0;
  double warm_stddev_seconds = 0.0;
  double warm_min_seconds = 0.0;
  /// Warm mean divided by the number of integrations per call.
  double warm_per_solve_seconds = 0.0;
};

/// Benchmarks gis_forward on a seeded random (batch, 3, height, width)
/// input with a fresh operator cache. Sizes must be >= 8.
GisTimingReport gis_timing_bench(int height, int width, int batch,
                                 int repeats);

}  // namespace gfc
