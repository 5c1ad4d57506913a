// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "gfc/fft.hpp"

namespace gfc {

/// Spectral Green's function inverting the 5-point Laplacian kernel on a
/// fixed height x width grid.
///
/// The spectrum is the elementwise quotient of the transforms of two
/// same-size grids: a Dirac impulse at (1,1), and the 3x3 kernel
/// [[0,-1,0],[-1,4,-1],[0,-1,0]] placed in the top-left corner with its
/// center at (1,1). The shared (1,1) placement makes the phase factors of
/// numerator and denominator cancel, leaving
///
///   spectrum(v,u) = 1 / (4 - 2cos(2*pi*v/H) - 2cos(2*pi*u/W))
///
/// up to roundoff. The denominator vanishes only at the zero frequency,
/// where the spectrum is overridden to exactly 0 (the mean-free solution;
/// the additive constant is fixed later from the padded border).
///
/// Stored as the r2c half-spectrum: height rows of (width/2 + 1) bins.
struct GreenOperator {
  int height = 0;
  int width = 0;
  std::vector<std::complex<double>> spectrum;

  int spectral_width() const { return fft::spectral_width(width); }
  const std::complex<double>& bin(int v, int u) const {
    return spectrum[static_cast<std::size_t>(v) * spectral_width() + u];
  }
};

/// Builds the operator for one grid size. Requires height, width >= 3 so
/// the 3x3 kernel embeds; throws ShapeError otherwise.
GreenOperator build_green_operator(int height, int width);

/// Size-keyed cache of immutable operators. Concurrent lookups share a
/// reader lock; insertion of a missing size is serialized.
class GreenOperatorCache {
 public:
  std::shared_ptr<const GreenOperator> get(int height, int width);

  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const GreenOperator>>
      operators_;
};

}  // namespace gfc
