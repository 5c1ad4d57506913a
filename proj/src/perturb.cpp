// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#include "gfc/perturb.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gfc {

ScalarField salt_pepper(const ScalarField& image, const NoiseSpec& spec) {
  if (!(spec.fraction >= 0.0 && spec.fraction <= 1.0)) {
    throw std::invalid_argument("noise fraction must lie in [0, 1]");
  }
  const std::uint64_t n = image.size();
  const std::uint64_t corrupt_count = static_cast<std::uint64_t>(
      std::llround(spec.fraction * static_cast<double>(n)));

  ScalarField out = image;
  if (corrupt_count == 0) {
    return out;
  }

  SplitMix64 rng(spec.seed);
  std::vector<std::uint64_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < corrupt_count; ++i) {
    const std::uint64_t j = i + rng.next_below(n - i);
    std::swap(positions[i], positions[j]);
  }
  for (std::uint64_t i = 0; i < corrupt_count; ++i) {
    out.values()[positions[i]] = (rng.next() & 1u) ? 1.0 : 0.0;
  }
  return out;
}

ScalarField darken(const ScalarField& image, double factor) {
  if (!(factor >= 0.0 && factor <= 1.0)) {
    throw std::invalid_argument("darken factor must lie in [0, 1]");
  }
  ScalarField out = image;
  for (double& v : out.values()) {
    v *= factor;
  }
  return out;
}

}  // namespace gfc
