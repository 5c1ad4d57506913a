// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gfc/field.hpp"

namespace gfc {

/// Raised for saliency inputs a metric cannot be defined on, e.g. ground
/// truth that is all-positive or all-negative under the mask.
struct MetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Binary per-pixel ground truth.
class GroundTruth {
 public:
  GroundTruth() = default;
  GroundTruth(int height, int width, std::vector<std::uint8_t> mask);

  /// Binarizes a field at `threshold` (>= compares positive).
  static GroundTruth from_field(const ScalarField& field,
                                double threshold = 0.5);

  int height() const { return height_; }
  int width() const { return width_; }
  std::uint8_t at(int y, int x) const {
    return mask_[static_cast<std::size_t>(y) * width_ + x];
  }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> mask_;
};

/// One sampled threshold of the PR/ROC sweep. false_rate is the !R of the
/// true/false-positive curve: |M & !G| / |!G|.
struct PrPoint {
  double threshold = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double false_rate = 0.0;
};

/// Per-threshold curve samples, thresholds ascending on the uniform grid
/// t_k = k / (levels - 1). 256 levels by default, 51 in fast mode.
struct PRCurve {
  std::vector<PrPoint> points;
  int levels = 0;
};

inline constexpr int kDefaultLevels = 256;
inline constexpr int kFastLevels = 51;
inline constexpr double kDefaultBetaSquared = 0.3;

/// Sweeps the threshold grid over the masked pixels. At each level the
/// binary mask is M = (s >= t); precision is defined as 1 when M is empty.
/// Requires s in [0,1], matching dims, a mask with >= 1 pixel, and ground
/// truth with >= 1 positive and >= 1 negative pixel under the mask
/// (throws MetricError otherwise).
PRCurve pr_curve(const ScalarField& s, const GroundTruth& g,
                 const ValidMask& mask, int levels = kDefaultLevels);

/// max over thresholds of (1 + b2) P R / (b2 P + R), skipping points where
/// the denominator is 0.
double f_measure(const PRCurve& curve,
                 double beta_squared = kDefaultBetaSquared);

/// max over thresholds of P.
double max_precision(const PRCurve& curve);

/// Trapezoidal integral of P over R, sorted by ascending R with
/// duplicate-R points merged by max P. A single-point curve returns that
/// point's P.
double mean_pr(const PRCurve& curve);

/// Trapezoidal integral of R over !R, same conventions as mean_pr.
double auc(const PRCurve& curve);

/// Mean absolute error over masked-in pixels.
double mae(const ScalarField& s, const GroundTruth& g, const ValidMask& mask);

/// Root mean square error over masked-in pixels.
double rmse(const ScalarField& s, const GroundTruth& g, const ValidMask& mask);

/// Cross-entropy with s clamped to [eps, 1 - eps], eps = 1e-7, over
/// masked-in pixels.
double cross_entropy(const ScalarField& s, const GroundTruth& g,
                     const ValidMask& mask);

/// Every scalar the suite defines, from one curve sweep.
struct MetricReport {
  double f_measure = 0.0;
  double max_precision = 0.0;
  double mean_pr = 0.0;
  double auc = 0.0;
  double mae = 0.0;
  double rmse = 0.0;
  double cross_entropy = 0.0;
  double beta_squared = kDefaultBetaSquared;
};

MetricReport evaluate_all(const ScalarField& s, const GroundTruth& g,
                          const ValidMask& mask, int levels = kDefaultLevels,
                          double beta_squared = kDefaultBetaSquared);

/// Arithmetic mean of each scalar across reports, in the given order.
MetricReport average_reports(std::span<const MetricReport> reports);

}  // namespace gfc
