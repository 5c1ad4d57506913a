// SPDX-FileCopyrightText: © 2026 The gfc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfc {

/// I/O failures: missing files, malformed headers, truncated payloads.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension mismatches and invalid geometry.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A 2-D real-valued grid stored row-major in double precision.
///
/// Images are normalized to [0,1] on load; Laplacians and gradient
/// components are unbounded. Non-empty fields have height, width >= 1 and
/// finite values only.
class ScalarField {
 public:
  ScalarField() = default;  // empty field, for assignment targets

  ScalarField(int height, int width, double fill = 0.0);
  ScalarField(int height, int width, std::vector<double> values);

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double& at(int y, int x) {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }
  double at(int y, int x) const {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool same_shape(const ScalarField& other) const {
    return height_ == other.height_ && width_ == other.width_;
  }

  double min() const;
  double max() const;
  double mean() const;

  /// True if every value is finite (no NaN/Inf).
  bool all_finite() const;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<double> values_;
};

/// Paired x/y component grids of a gradient-domain field.
struct VectorField {
  ScalarField ex;
  ScalarField ey;

  VectorField() = default;
  VectorField(ScalarField x_part, ScalarField y_part);

  int height() const { return ex.height(); }
  int width() const { return ex.width(); }
};

/// N x C x H x W real tensor, row-major with W fastest.
class FeatureBatch {
 public:
  FeatureBatch() = default;
  FeatureBatch(int items, int channels, int height, int width,
               double fill = 0.0);
  FeatureBatch(int items, int channels, int height, int width,
               std::vector<double> values);

  int items() const { return items_; }
  int channels() const { return channels_; }
  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t size() const { return values_.size(); }

  std::size_t channel_offset(int item, int channel) const {
    return (static_cast<std::size_t>(item) * channels_ + channel) * height_ *
           width_;
  }
  double* channel_data(int item, int channel) {
    return values_.data() + channel_offset(item, channel);
  }
  const double* channel_data(int item, int channel) const {
    return values_.data() + channel_offset(item, channel);
  }

  /// Copies one channel plane out as a ScalarField.
  ScalarField channel_field(int item, int channel) const;
  /// Copies a ScalarField into one channel plane (dims must match).
  void set_channel(int item, int channel, const ScalarField& field);

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  bool all_finite() const;

 private:
  int items_ = 0;
  int channels_ = 0;
  int height_ = 0;
  int width_ = 0;
  std::vector<double> values_;
};

/// Per-pixel validity flags: 1 = counted by metrics, 0 = ignored.
class ValidMask {
 public:
  ValidMask() = default;
  ValidMask(int height, int width, std::uint8_t fill = 1);

  /// Mask counting every pixel.
  static ValidMask all(int height, int width) {
    return ValidMask(height, width, 1);
  }

  int height() const { return height_; }
  int width() const { return width_; }
  std::uint8_t& at(int y, int x) {
    return flags_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t at(int y, int x) const {
    return flags_[static_cast<std::size_t>(y) * width_ + x];
  }
  const std::vector<std::uint8_t>& flags() const { return flags_; }
  std::vector<std::uint8_t>& flags() { return flags_; }

  /// Number of flagged-in pixels.
  std::size_t count() const;

 private:
  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> flags_;
};

/// Grows the field by `margin` pixels of exact zero on every side.
ScalarField zero_pad(const ScalarField& field, int margin);

/// Returns the central region, undoing zero_pad with the same margin.
/// Throws ShapeError when either dimension is <= 2 * margin.
ScalarField crop_pad(const ScalarField& field, int margin);

}  // namespace gfc
