// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "gfc/field.hpp"
#include "gfc/rng.hpp"

namespace gfc {

/// Parameters of the impulse-noise operator.
struct NoiseSpec {
  /// Portion of pixel positions corrupted, in [0, 1].
  double fraction = 0.0;
  /// Seed of the pseudo-random stream.
  std::uint64_t seed = 0;
};

/// Overwrites exactly round(fraction * N) pixel positions, sampled without
/// replacement by a partial Fisher-Yates shuffle over the seeded SplitMix64
/// stream, with 0 or 1 drawn with equal probability from the same stream
/// (all position draws first, then one value draw per corrupted pixel, in
/// selection order). Deterministic for a fixed seed.
ScalarField salt_pepper(const ScalarField& image, const NoiseSpec& spec);

/// Multiplies every value by factor; factor must lie in [0, 1]
/// ("reduced by 80%" means factor 0.2).
ScalarField darken(const ScalarField& image, double factor);

}  // namespace gfc
